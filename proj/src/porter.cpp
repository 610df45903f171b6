#include "htm/porter.hpp"

#include <cstring>

namespace htm {
namespace {

// Direct transcription of the reference stemmer. b holds the word being
// stemmed; k is the offset of its last live character; j is set by ends() and
// marks the end of the stem in front of a matched suffix.
struct Stemmer {
    char b[256];
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

    // number of vowel-consonant sequences in b[0..j]
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

    bool doublec(int idx) const {
        if (idx < 1) return false;
        if (b[idx] != b[idx - 1]) return false;
        return cons(idx);
    }

    // consonant-vowel-consonant ending at i, last consonant not w, x or y
    bool cvc(int i) const {
        if (i < 2 || !cons(i) || cons(i - 1) || !cons(i - 2)) return false;
        char ch = b[i];
        return ch != 'w' && ch != 'x' && ch != 'y';
    }

    bool ends(const char* s) {
        int length = static_cast<int>(std::strlen(s));
        if (length > k + 1) return false;
        if (std::memcmp(b + k - length + 1, s, length) != 0) return false;
        j = k - length;
        return true;
    }

    void set_to(const char* s) {
        int length = static_cast<int>(std::strlen(s));
        std::memmove(b + j + 1, s, length);
        k = j + length;
    }

    void replace_if_stem(const char* s) {
        if (m() > 0) set_to(s);
    }

    // plurals and -ed / -ing
    void step1ab() {
        if (b[k] == 's') {
            if (ends("sses"))
                k -= 2;
            else if (ends("ies"))
                set_to("i");
            else if (b[k - 1] != 's')
                --k;
        }
        if (ends("eed")) {
            if (m() > 0) --k;
        } else if ((ends("ed") || ends("ing")) && vowel_in_stem()) {
            k = j;
            if (ends("at"))
                set_to("ate");
            else if (ends("bl"))
                set_to("ble");
            else if (ends("iz"))
                set_to("ize");
            else if (doublec(k)) {
                --k;
                char ch = b[k];
                if (ch == 'l' || ch == 's' || ch == 'z') ++k;
            } else if (m() == 1 && cvc(k)) {
                set_to("e");
            }
        }
    }

    // terminal y -> i when there is another vowel in the stem
    void step1c() {
        if (ends("y") && vowel_in_stem()) b[k] = 'i';
    }

    // double suffix -> single suffix, stem must have m() > 0
    void step2() {
        switch (b[k - 1]) {
            case 'a':
                if (ends("ational")) { replace_if_stem("ate"); break; }
                if (ends("tional")) { replace_if_stem("tion"); break; }
                break;
            case 'c':
                if (ends("enci")) { replace_if_stem("ence"); break; }
                if (ends("anci")) { replace_if_stem("ance"); break; }
                break;
            case 'e':
                if (ends("izer")) { replace_if_stem("ize"); break; }
                break;
            case 'l':
                if (ends("bli")) { replace_if_stem("ble"); break; }
                if (ends("alli")) { replace_if_stem("al"); break; }
                if (ends("entli")) { replace_if_stem("ent"); break; }
                if (ends("eli")) { replace_if_stem("e"); break; }
                if (ends("ousli")) { replace_if_stem("ous"); break; }
                break;
            case 'o':
                if (ends("ization")) { replace_if_stem("ize"); break; }
                if (ends("ation")) { replace_if_stem("ate"); break; }
                if (ends("ator")) { replace_if_stem("ate"); break; }
                break;
            case 's':
                if (ends("alism")) { replace_if_stem("al"); break; }
                if (ends("iveness")) { replace_if_stem("ive"); break; }
                if (ends("fulness")) { replace_if_stem("ful"); break; }
                if (ends("ousness")) { replace_if_stem("ous"); break; }
                break;
            case 't':
                if (ends("aliti")) { replace_if_stem("al"); break; }
                if (ends("iviti")) { replace_if_stem("ive"); break; }
                if (ends("biliti")) { replace_if_stem("ble"); break; }
                break;
            case 'g':
                if (ends("logi")) { replace_if_stem("log"); break; }
                break;
        }
    }

    void step3() {
        switch (b[k]) {
            case 'e':
                if (ends("icate")) { replace_if_stem("ic"); break; }
                if (ends("ative")) { replace_if_stem(""); break; }
                if (ends("alize")) { replace_if_stem("al"); break; }
                break;
            case 'i':
                if (ends("iciti")) { replace_if_stem("ic"); break; }
                break;
            case 'l':
                if (ends("ical")) { replace_if_stem("ic"); break; }
                if (ends("ful")) { replace_if_stem(""); break; }
                break;
            case 's':
                if (ends("ness")) { replace_if_stem(""); break; }
                break;
        }
    }

    // drop -ant, -ence etc. when m() > 1
    void step4() {
        switch (b[k - 1]) {
            case 'a':
                if (ends("al")) break;
                return;
            case 'c':
                if (ends("ance")) break;
                if (ends("ence")) break;
                return;
            case 'e':
                if (ends("er")) break;
                return;
            case 'i':
                if (ends("ic")) break;
                return;
            case 'l':
                if (ends("able")) break;
                if (ends("ible")) break;
                return;
            case 'n':
                if (ends("ant")) break;
                if (ends("ement")) break;
                if (ends("ment")) break;
                if (ends("ent")) break;
                return;
            case 'o':
                if (ends("ion") && (b[j] == 's' || b[j] == 't')) break;
                if (ends("ou")) break;
                return;
            case 's':
                if (ends("ism")) break;
                return;
            case 't':
                if (ends("ate")) break;
                if (ends("iti")) break;
                return;
            case 'u':
                if (ends("ous")) break;
                return;
            case 'v':
                if (ends("ive")) break;
                return;
            case 'z':
                if (ends("ize")) break;
                return;
            default:
                return;
        }
        if (m() > 1) k = j;
    }

    // final -e removal and -ll -> -l. j deliberately stays at the original k
    // through both checks, as in the reference implementation.
    void step5() {
        j = k;
        if (b[k] == 'e') {
            int a = m();
            if (a > 1 || (a == 1 && !cvc(k - 1))) --k;
        }
        if (b[k] == 'l' && doublec(k) && m() > 1) --k;
    }
};

}  // namespace

std::string stem_porter(const std::string& token) {
    const std::size_t n = token.size();
    if (n <= 2 || n >= sizeof(Stemmer::b)) return token;
    for (char c : token)
        if (c < 'a' || c > 'z') return token;

    Stemmer s;
    std::memcpy(s.b, token.data(), n);
    s.k = static_cast<int>(n) - 1;
    s.step1ab();
    s.step1c();
    s.step2();
    s.step3();
    s.step4();
    s.step5();
    return std::string(s.b, s.b + s.k + 1);
}

}  // namespace htm
