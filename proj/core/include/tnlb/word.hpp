#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace tnlb {

/// One letter of a free-group word: a generator index and a sign.
struct Letter {
    int gen = 0;
    int sign = 1;  // +1 or -1
    friend bool operator==(const Letter&, const Letter&) = default;
    friend auto operator<=>(const Letter&, const Letter&) = default;
};

/// Freely reduced word in a free group. Reduction happens on construction
/// and after every concatenation; instances are immutable values.
class Word {
  public:
    Word() = default;
    explicit Word(std::vector<Letter> letters);

    static Word generator(int index, int sign = 1) { return Word({Letter{index, sign}}); }

    bool empty() const { return letters_.size() == 0; }
    size_t size() const { return letters_.size(); }
    const std::vector<Letter>& letters() const { return letters_; }

    Word inverse() const;
    Word operator*(const Word& o) const;  // concatenate + reduce

    /// Prefix consisting of the first k letters.
    Word prefix(size_t k) const;

    /// Exponent-sum vector over `gen_count` generators.
    std::vector<long> exponents(size_t gen_count) const;

    /// Rendering with caret powers, e.g. "x y^-1 x^2"; empty word is "1".
    std::string str(const std::vector<std::string>& names) const;

    friend bool operator==(const Word&, const Word&) = default;

    /// Length-then-lexicographic order; usable as a map key order.
    friend bool operator<(const Word& a, const Word& b) {
        if (a.letters_.size() != b.letters_.size())
            return a.letters_.size() < b.letters_.size();
        return a.letters_ < b.letters_;
    }

  private:
    std::vector<Letter> letters_;
};

}  // namespace tnlb
