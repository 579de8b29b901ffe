#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace qfs {

/// A word in a free group. Letter k > 0 is generator k, -k its inverse.
using Word = std::vector<int>;

Word inverse(const Word& w);
Word concat(const Word& u, const Word& v);
Word free_reduce(const Word& w);
/// Free reduction followed by removal of cancelling letters at the two ends.
Word cyclic_reduce(const Word& w);
/// Replaces each generator g in `subs` by subs[g] (and g^-1 by its inverse),
/// then freely reduces.
Word substitute(const Word& w, const std::map<int, Word>& subs);

/// Letters of a free group of rank k in enumeration order 1, -1, 2, -2, ...
std::vector<int> alphabet(int rank);

/// All freely reduced words of length exactly `length`, in lexicographic
/// order with respect to alphabet(rank).
std::vector<Word> reduced_words(int rank, int length);

/// 2k (2k - 1)^(L - 1), the number of reduced words of length L >= 1.
std::uint64_t reduced_word_count(int rank, int length);

/// Surface-group generator names: 2i - 1 is "a<i>" and 2i is "b<i>";
/// inverses are written with a capital letter ("A1", "B2").
std::string generator_name(int letter);
std::string format_word(const Word& w);
/// Parses "a1 b1 A1 B1", "a1b1A1B1" or "a1*b1*a1^-1*b1^-1". An unknown or
/// out-of-range generator raises UnknownGenerator.
Word parse_word(const std::string& text, int rank);

}  // namespace qfs
