#include "parryac/stream.hpp"

#include <utility>

#include "parryac/errors.hpp"

namespace parryac {

WordStream::WordStream(Morphism m, StreamTarget target) : m_(std::move(m)), target_(target) {
  if (target_ != StreamTarget::UBeta && m_.is_simple() && m_.q() == 1) {
    throw UnsupportedConstruction("v and w are not constructed for the simple family with q = 1");
  }
  // The non-simple v coincides with u.
  if (target_ == StreamTarget::V && !m_.is_simple()) target_ = StreamTarget::UBeta;
}

// Pushes the next segment in reverse so that its first letter is on top.
void WordStream::push_next_segment() {
  const std::uint32_t level = level_++;
  const bool simple = m_.is_simple();
  switch (target_) {
    case StreamTarget::UBeta:
      if (level == 0) {
        stack_.push_back({Letter::A, 0});
      } else {
        const std::uint32_t j = level - 1;
        stack_.push_back({Letter::B, j});
        for (std::uint32_t i = 1; i < m_.p(); ++i) stack_.push_back({Letter::A, j});
      }
      break;
    case StreamTarget::W:
      if (!simple) {
        stack_.push_back({Letter::B, level});
      } else if (level == 0) {
        stack_.push_back({Letter::B, 0});
      } else {
        for (std::uint32_t i = 1; i < m_.q(); ++i) stack_.push_back({Letter::A, 2 * level - 1});
      }
      break;
    case StreamTarget::V:
      if (level == 0) {
        for (std::uint32_t i = 0; i < m_.q(); ++i) stack_.push_back({Letter::A, 0});
      } else {
        for (std::uint32_t i = 1; i < m_.q(); ++i) stack_.push_back({Letter::A, 2 * level});
      }
      break;
  }
}

void WordStream::emit(std::size_t count, FiniteWord& out) {
  out.reserve(out.size() + count);
  std::size_t produced = 0;
  while (produced < count) {
    if (stack_.empty()) {
      push_next_segment();
      continue;
    }
    const Node top = stack_.back();
    stack_.pop_back();
    if (top.depth == 0) {
      out.push_back(top.letter);
      ++produced;
      continue;
    }
    const auto& image = m_.image(top.letter);
    for (auto it = image.letters().rbegin(); it != image.letters().rend(); ++it) {
      stack_.push_back({*it, top.depth - 1});
    }
  }
  emitted_ += produced;
}

FiniteWord WordStream::take(std::size_t count) {
  FiniteWord out;
  emit(count, out);
  return out;
}

}  // namespace parryac
