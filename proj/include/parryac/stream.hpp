#ifndef PARRYAC_STREAM_HPP
#define PARRYAC_STREAM_HPP

#include <cstddef>
#include <cstdint>
#include <vector>

#include "parryac/morphism.hpp"
#include "parryac/word.hpp"

namespace parryac {

// UBeta is the fixed point of the morphism. W and V are the words whose
// prefixes carry the most and the fewest B's among factors of that length.
enum class StreamTarget { UBeta, W, V };

// Demand-driven generator of one of the infinite words above.
//
// Each word is a concatenation of segments of the form phi^j(x). The stream
// keeps an explicit stack of (letter, depth) pairs and expands the top entry
// until a depth-0 letter is reached, so only emitted letters are ever
// materialized and memory stays proportional to the recursion depth.
//
// Segment schedules:
//   UBeta (and V for non-simple):  A, then phi^j(A)^(p-1) phi^j(B) for j = 0, 1, ...
//   W, non-simple:                 phi^j(B) for j = 0, 1, ...
//   W, simple:                     B, then phi^j(A)^(q-1) for j = 1, 3, 5, ...
//   V, simple:                     A^q, then phi^j(A)^(q-1) for j = 2, 4, 6, ...
//
// Single-owner: one stream per thread.
class WordStream {
 public:
  // Throws UnsupportedConstruction for W/V on a simple morphism with q = 1.
  WordStream(Morphism m, StreamTarget target);

  // Appends the next count letters to out.
  void emit(std::size_t count, FiniteWord& out);
  FiniteWord take(std::size_t count);

  std::size_t emitted() const noexcept { return emitted_; }

 private:
  struct Node {
    Letter letter;
    std::uint32_t depth;
  };

  void push_next_segment();

  Morphism m_;
  StreamTarget target_;
  std::vector<Node> stack_;
  std::uint32_t level_ = 0;
  std::size_t emitted_ = 0;
};

}  // namespace parryac

#endif  // PARRYAC_STREAM_HPP
