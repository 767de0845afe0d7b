#pragma once

#include <compare>
#include <stdexcept>
#include <string>
#include <vector>

namespace hecke {

// Letter k > 0 is s_k, k < 0 is s_|k|^-1.
using Letters = std::vector<int>;

struct StrandMismatch : std::invalid_argument {
    StrandMismatch() : std::invalid_argument("braid words have different strand counts") {}
};
struct IndexOutOfRange : std::out_of_range {
    using std::out_of_range::out_of_range;
};
struct ParseError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct UnknownName : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

class Word {
public:
    Word() = default;
    Word(int n, Letters letters);

    int n() const { return n_; }
    const Letters& letters() const { return letters_; }
    std::size_t size() const { return letters_.size(); }
    bool empty() const { return letters_.empty(); }
    bool operator==(const Word&) const = default;

private:
    int n_ = 2;
    Letters letters_;
};

Letters free_reduce(const Letters& w);
Word free_reduce(const Word& w);
Word concat(const Word& u, const Word& v);
Word inverse(const Word& w);
Letters inverse(const Letters& w);
Word shift(const Word& w);
Word mirror(const Word& w);
Word ad_delta(const Word& w);
Word embed(const Word& w, int n);

// delta_garside, w0, w_plus, w_minus, delta5, c_n, y_n, x_plus, x_minus,
// y_plus_word, y_minus_word
Word special(const std::string& name, int n);

// Order used by the rewriting strategy: shorter first, then letterwise with
// s_i < s_i^-1 < s_{i+1}.
inline int letter_key(int l) { return l > 0 ? 2 * l : -2 * l + 1; }
std::strong_ordering term_compare(const Letters& x, const Letters& y);
struct TermLess {
    bool operator()(const Letters& x, const Letters& y) const { return term_compare(x, y) < 0; }
};

Letters parse_letters(const std::string& text);
Word parse_word(const std::string& text, int n);
std::string format_letters(const Letters& w);

struct LettersHash {
    std::size_t operator()(const Letters& w) const {
        std::size_t h = 0xcbf29ce484222325ull;
        for (int l : w) h = (h ^ static_cast<std::size_t>(l + 64)) * 0x100000001b3ull;
        return h;
    }
};

}  // namespace hecke
