#include "qfs/words.hpp"

#include <algorithm>
#include <cctype>

#include "qfs/errors.hpp"

namespace qfs {

Word inverse(const Word& w) {
  Word out(w.rbegin(), w.rend());
  for (int& x : out) x = -x;
  return out;
}

Word concat(const Word& u, const Word& v) {
  Word out = u;
  out.insert(out.end(), v.begin(), v.end());
  return out;
}

Word free_reduce(const Word& w) {
  Word out;
  out.reserve(w.size());
  for (int x : w) {
    if (!out.empty() && out.back() == -x)
      out.pop_back();
    else
      out.push_back(x);
  }
  return out;
}

Word cyclic_reduce(const Word& w) {
  Word r = free_reduce(w);
  std::size_t lo = 0, hi = r.size();
  while (hi - lo >= 2 && r[lo] == -r[hi - 1]) {
    ++lo;
    --hi;
  }
  return Word(r.begin() + static_cast<std::ptrdiff_t>(lo), r.begin() + static_cast<std::ptrdiff_t>(hi));
}

Word substitute(const Word& w, const std::map<int, Word>& subs) {
  Word out;
  for (int x : w) {
    auto it = subs.find(std::abs(x));
    if (it == subs.end()) {
      out.push_back(x);
    } else if (x > 0) {
      out.insert(out.end(), it->second.begin(), it->second.end());
    } else {
      const Word inv = inverse(it->second);
      out.insert(out.end(), inv.begin(), inv.end());
    }
  }
  return free_reduce(out);
}

std::vector<int> alphabet(int rank) {
  std::vector<int> a;
  for (int g = 1; g <= rank; ++g) {
    a.push_back(g);
    a.push_back(-g);
  }
  return a;
}

std::vector<Word> reduced_words(int rank, int length) {
  std::vector<Word> level{Word{}};
  const auto letters = alphabet(rank);
  for (int n = 0; n < length; ++n) {
    std::vector<Word> next;
    for (const Word& w : level)
      for (int x : letters) {
        if (!w.empty() && w.back() == -x) continue;
        Word v = w;
        v.push_back(x);
        next.push_back(std::move(v));
      }
    level = std::move(next);
  }
  return level;
}

std::uint64_t reduced_word_count(int rank, int length) {
  if (length == 0) return 1;
  std::uint64_t n = 2 * static_cast<std::uint64_t>(rank);
  for (int i = 1; i < length; ++i) n *= 2 * static_cast<std::uint64_t>(rank) - 1;
  return n;
}

std::string generator_name(int letter) {
  const int g = std::abs(letter);
  const int index = (g + 1) / 2;
  char c = (g % 2 == 1) ? 'a' : 'b';
  if (letter < 0) c = static_cast<char>(std::toupper(c));
  return c + std::to_string(index);
}

std::string format_word(const Word& w) {
  std::string out;
  for (int x : w) {
    if (!out.empty()) out += ' ';
    out += generator_name(x);
  }
  return out;
}

Word parse_word(const std::string& text, int rank) {
  Word out;
  std::size_t i = 0;
  auto skip = [&] {
    while (i < text.size() && (std::isspace(static_cast<unsigned char>(text[i])) || text[i] == '*' || text[i] == '.'))
      ++i;
  };
  skip();
  while (i < text.size()) {
    const char c = text[i];
    const char lower = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    if (lower != 'a' && lower != 'b') throw UnknownGenerator("unexpected character '" + std::string(1, c) + "' in word");
    ++i;
    std::size_t j = i;
    while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
    if (j == i) throw UnknownGenerator("generator '" + std::string(1, c) + "' lacks an index");
    const int index = std::stoi(text.substr(i, j - i));
    i = j;
    bool inv = std::isupper(static_cast<unsigned char>(c)) != 0;
    if (text.compare(i, 3, "^-1") == 0) {
      inv = !inv;
      i += 3;
    }
    const int g = 2 * index - (lower == 'a' ? 1 : 0);
    if (index < 1 || g > rank) throw UnknownGenerator("unknown generator " + std::string(1, lower) + std::to_string(index));
    out.push_back(inv ? -g : g);
    skip();
  }
  return out;
}

}  // namespace qfs
