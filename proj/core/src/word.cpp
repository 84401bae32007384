#include "tnlb/word.hpp"

#include <sstream>

namespace tnlb {

Word::Word(std::vector<Letter> letters) {
    letters_.reserve(letters.size());
    for (const Letter& l : letters) {
        if (!letters_.empty() && letters_.back().gen == l.gen &&
            letters_.back().sign == -l.sign)
            letters_.pop_back();
        else
            letters_.push_back(l);
    }
}

Word Word::inverse() const {
    std::vector<Letter> rev;
    rev.reserve(letters_.size());
    for (auto it = letters_.rbegin(); it != letters_.rend(); ++it)
        rev.push_back(Letter{it->gen, -it->sign});
    Word w;
    w.letters_ = std::move(rev);  // inverse of a reduced word is reduced
    return w;
}

Word Word::operator*(const Word& o) const {
    std::vector<Letter> cat = letters_;
    cat.insert(cat.end(), o.letters_.begin(), o.letters_.end());
    return Word(std::move(cat));
}

Word Word::prefix(size_t k) const {
    Word w;
    w.letters_.assign(letters_.begin(), letters_.begin() + static_cast<long>(k));
    return w;
}

std::vector<long> Word::exponents(size_t gen_count) const {
    std::vector<long> e(gen_count, 0);
    for (const Letter& l : letters_) e[static_cast<size_t>(l.gen)] += l.sign;
    return e;
}

std::string Word::str(const std::vector<std::string>& names) const {
    if (letters_.empty()) return "1";
    std::ostringstream out;
    size_t i = 0;
    while (i < letters_.size()) {
        size_t j = i;
        while (j < letters_.size() && letters_[j] == letters_[i]) ++j;
        long pow = static_cast<long>(j - i) * letters_[i].sign;
        if (i > 0) out << ' ';
        out << names[static_cast<size_t>(letters_[i].gen)];
        if (pow != 1) out << '^' << pow;
        i = j;
    }
    return out.str();
}

}  // namespace tnlb
