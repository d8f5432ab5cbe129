#include <algorithm>
#include <cctype>
#include <string>
#include <string_view>

#include "clir/lexicon.hpp"

namespace clir::lexicon {

namespace {

// Reference Porter algorithm. b holds the lowercased word, k is the index
// of its last character, j marks the stem end set by ends().
struct PorterState {
    std::string b;
    int k = 0;
    int j = 0;

    bool cons(int i) const {
        switch (b[i]) {
            case 'a': case 'e': case 'i': case 'o': case 'u':
                return false;
            case 'y':
                return (i == 0) ? true : !cons(i - 1);
            default:
                return true;
        }
    }

    // Counts VC sequences in b[0..j].
    int m() const {
        int n = 0;
        int i = 0;
        while (true) {
            if (i > j) return n;
            if (!cons(i)) break;
            ++i;
        }
        ++i;
        while (true) {
            while (true) {
                if (i > j) return n;
                if (cons(i)) break;
                ++i;
            }
            ++i;
            ++n;
            while (true) {
                if (i > j) return n;
                if (!cons(i)) break;
                ++i;
            }
            ++i;
        }
    }

    bool vowel_in_stem() const {
        for (int i = 0; i <= j; ++i)
            if (!cons(i)) return true;
        return false;
    }

    bool double_cons(int i) const {
        if (i < 1) return false;
        if (b[i] != b[i - 1]) return false;
        return cons(i);
    }

    // consonant-vowel-consonant ending at i, last consonant not w, x or y.
    bool cvc(int i) const {
        if (i < 2 || !cons(i) || cons(i - 1) || !cons(i - 2)) return false;
        char ch = b[i];
        return ch != 'w' && ch != 'x' && ch != 'y';
    }

    bool ends(std::string_view s) {
        int len = static_cast<int>(s.size());
        if (len > k + 1) return false;
        if (b.compare(k - len + 1, len, s) != 0) return false;
        j = k - len;
        return true;
    }

    void set_to(std::string_view s) {
        b.replace(j + 1, b.size() - (j + 1), s);
        k = j + static_cast<int>(s.size());
    }

    void replace_if_m(std::string_view s) {
        if (m() > 0) set_to(s);
    }

    void step1ab() {
        if (b[k] == 's') {
            if (ends("sses")) k -= 2;
            else if (ends("ies")) set_to("i");
            else if (b[k - 1] != 's') --k;
        }
        if (ends("eed")) {
            if (m() > 0) --k;
        } else if ((ends("ed") || ends("ing")) && vowel_in_stem()) {
            k = j;
            if (ends("at")) set_to("ate");
            else if (ends("bl")) set_to("ble");
            else if (ends("iz")) set_to("ize");
            else if (double_cons(k)) {
                --k;
                char ch = b[k];
                if (ch == 'l' || ch == 's' || ch == 'z') ++k;
            } else if (m() == 1 && cvc(k)) {
                set_to("e");
            }
        }
    }

    void step1c() {
        if (ends("y") && vowel_in_stem()) b[k] = 'i';
    }

    void step2() {
        if (ends("ational")) return replace_if_m("ate");
        if (ends("tional")) return replace_if_m("tion");
        if (ends("enci")) return replace_if_m("ence");
        if (ends("anci")) return replace_if_m("ance");
        if (ends("izer")) return replace_if_m("ize");
        if (ends("bli")) return replace_if_m("ble");
        if (ends("alli")) return replace_if_m("al");
        if (ends("entli")) return replace_if_m("ent");
        if (ends("eli")) return replace_if_m("e");
        if (ends("ousli")) return replace_if_m("ous");
        if (ends("ization")) return replace_if_m("ize");
        if (ends("ation")) return replace_if_m("ate");
        if (ends("ator")) return replace_if_m("ate");
        if (ends("alism")) return replace_if_m("al");
        if (ends("iveness")) return replace_if_m("ive");
        if (ends("fulness")) return replace_if_m("ful");
        if (ends("ousness")) return replace_if_m("ous");
        if (ends("aliti")) return replace_if_m("al");
        if (ends("iviti")) return replace_if_m("ive");
        if (ends("biliti")) return replace_if_m("ble");
        if (ends("logi")) return replace_if_m("log");
    }

    void step3() {
        if (ends("icate")) return replace_if_m("ic");
        if (ends("ative")) return replace_if_m("");
        if (ends("alize")) return replace_if_m("al");
        if (ends("iciti")) return replace_if_m("ic");
        if (ends("ical")) return replace_if_m("ic");
        if (ends("ful")) return replace_if_m("");
        if (ends("ness")) return replace_if_m("");
    }

    void step4() {
        if (ends("al")) {}
        else if (ends("ance")) {}
        else if (ends("ence")) {}
        else if (ends("er")) {}
        else if (ends("ic")) {}
        else if (ends("able")) {}
        else if (ends("ible")) {}
        else if (ends("ant")) {}
        else if (ends("ement")) {}
        else if (ends("ment")) {}
        else if (ends("ent")) {}
        else if (ends("ion") && j >= 0 && (b[j] == 's' || b[j] == 't')) {}
        else if (ends("ou")) {}
        else if (ends("ism")) {}
        else if (ends("ate")) {}
        else if (ends("iti")) {}
        else if (ends("ous")) {}
        else if (ends("ive")) {}
        else if (ends("ize")) {}
        else return;
        if (m() > 1) k = j;
    }

    void step5() {
        j = k;
        if (b[k] == 'e') {
            int a = m();
            if (a > 1 || (a == 1 && !cvc(k - 1))) --k;
        }
        if (b[k] == 'l' && double_cons(k) && m() > 1) --k;
    }
};

}  // namespace

std::string porter_stem(std::string_view token) {
    std::string word(token);
    std::transform(word.begin(), word.end(), word.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    if (word.size() <= 2) return word;

    PorterState s;
    s.b = word;
    s.k = static_cast<int>(word.size()) - 1;
    s.step1ab();
    s.step1c();
    s.step2();
    s.step3();
    s.step4();
    s.step5();
    s.b.resize(s.k + 1);
    return s.b;
}

}  // namespace clir::lexicon
