#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace kneadlab {

// Alphabet of itineraries, ordered L < C < R.
enum class Symbol : std::uint8_t { L = 0, C = 1, R = 2 };

char to_char(Symbol s);
Symbol symbol_from_char(char c);  // throws std::invalid_argument

enum class WordKind : std::uint8_t {
  FiniteC,    // ends in C, no other C (a closed superstable itinerary)
  Truncated,  // prefix of an infinite itinerary, contains no C
};

// A finite word over {L,C,R}.  Finite-terminated words stand for the
// periodic itinerary obtained by repeating the whole word (including the C);
// truncated words stand for an unknown infinite continuation.
class Word {
 public:
  Word(std::vector<Symbol> symbols, WordKind kind);

  // "RLLC" -> finite-terminated, "RLLR" -> truncated.  Any character outside
  // {L,C,R}, an interior C, or an empty string is rejected.
  static Word parse(std::string_view text);

  WordKind kind() const noexcept { return kind_; }
  std::size_t size() const noexcept { return symbols_.size(); }
  Symbol at(std::size_t i) const { return symbols_[i]; }
  const std::vector<Symbol>& symbols() const noexcept { return symbols_; }

  // Symbol of the periodic extension (finite words); for truncated words the
  // index must stay in range.
  Symbol extended_at(std::size_t i) const {
    return kind_ == WordKind::FiniteC ? symbols_[i % symbols_.size()]
                                      : symbols_[i];
  }

  std::string str() const;

  bool operator==(const Word& other) const noexcept {
    return kind_ == other.kind_ && symbols_ == other.symbols_;
  }

 private:
  std::vector<Symbol> symbols_;
  WordKind kind_;
};

enum class Ordering : std::int8_t { Less = -1, Equal = 0, Greater = 1, Undecided = 2 };

const char* to_string(Ordering o);

// Parity-lexicographic comparison.  At the first index N where the two
// (extended) sequences differ, the symbol order L < C < R decides, flipped
// when the shared prefix holds an odd number of R's.  Finite words are
// compared through their periodic extensions, so two words denoting the same
// periodic itinerary compare Equal.  Undecided arises only when a truncated
// word runs out while still agreeing with the other sequence.
Ordering compare(const Word& a, const Word& b);

// Drops the leading symbol; kind is preserved.  Length-1 words throw.
Word shift(const Word& w);

// True iff w is >= every shift of itself.  Finite words use the periodic
// extension (a shift becomes a rotation); for truncated words a shift that
// merely runs out of symbols cannot refute maximality.
bool is_shift_maximal(const Word& w);

}  // namespace kneadlab
