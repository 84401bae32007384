#pragma once

#include <string>
#include <vector>

#include "tnlb/word.hpp"

namespace tnlb {

/// Finite group presentation; the sole topological input. Relators are
/// stored freely reduced (an empty relator is kept as the empty word).
struct GroupPresentation {
    std::vector<std::string> generator_names;
    std::vector<Word> relators;

    size_t generator_count() const { return generator_names.size(); }
    std::string str() const;
};

/// Parse the textual grammar
///   gens: <name>(, <name>)*; rels: <word>(, <word>)*;
/// where a word is a whitespace-separated sequence of letters `name` or
/// `name^k` (k a nonzero integer, expanded), and `#` starts a comment.
/// Throws ParseError with 1-based line/column on malformed input.
GroupPresentation parse_presentation(const std::string& text);

}  // namespace tnlb
