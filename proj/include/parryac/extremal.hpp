#ifndef PARRYAC_EXTREMAL_HPP
#define PARRYAC_EXTREMAL_HPP

#include <cstddef>
#include <cstdint>

#include "parryac/bigint.hpp"
#include "parryac/morphism.hpp"
#include "parryac/word.hpp"

namespace parryac {

// v: prefixes hold the fewest B's among factors of u of that length.
// w: prefixes hold the most.
enum class Extremal { V, W };

// Index of a finite stage v^(M) or w^(N). For the simple-family v, -1 stands
// for the one-letter stage "A" used when n < |v^(0)| = q.
struct StageIndex {
  std::int64_t value = 0;

  friend bool operator==(const StageIndex&, const StageIndex&) = default;
  friend auto operator<=>(const StageIndex&, const StageIndex&) = default;
};

// ---- non-simple family: w^(0) = B, w^(n) = B phi(w^(n-1)); v = u ----

FiniteWord w_prefix_nonsimple(const Morphism& m, std::size_t len,
                              std::size_t cap = kDefaultPrefixCap);

// |w^(N)| = 1 + sum_{j=1..N} |phi^j(B)|.
BigInt w_stage_length_nonsimple(const Morphism& m, std::size_t stage);

// k = N + 2 where U_N <= n < U_{N+1}; always satisfies n <= |w^(k)|.
std::size_t choose_k_nonsimple(const Morphism& m, const BigInt& n);

// |w[0, n)|_B = U_k - sum_{j=1..k} e_j U_{j-1}, (e) = <U_{k+1} - n>_U.
// Throws IndexError unless n <= |w^(k)|.
BigInt w_b_count_nonsimple(const Morphism& m, const BigInt& n, std::size_t k);

// ---- simple family, q > 1 ----
//   w^(N) = B phi(A^{q-1}) phi^3(A^{q-1}) ... phi^{2N-1}(A^{q-1})
//   v^(M) = A^q phi^2(A^{q-1}) ... phi^{2M}(A^{q-1})

FiniteWord wv_prefix_simple(const Morphism& m, Extremal which, std::size_t len,
                            std::size_t cap = kDefaultPrefixCap);

// |v^(M)| = 1 + (q-1) sum_{j=0..M} U_{2j}   (M = -1 gives 1)
// |w^(N)| = 1 + (q-1) sum_{j=0..N-1} U_{2j+1}
BigInt wv_stage_length_simple(const Morphism& m, Extremal which, StageIndex idx);

struct SimpleStages {
  StageIndex v_stage;  // M
  StageIndex w_stage;  // N
  std::size_t top;     // J with U_J <= n < U_{J+1}

  friend bool operator==(const SimpleStages&, const SimpleStages&) = default;
};

// Guarantees |w^(N)| <= n < |w^(N+1)| and |v^(M)| <= n < |v^(M+1)|.
SimpleStages choose_mn_simple(const Morphism& m, const BigInt& n);

// Throws StageMismatch unless |v^(M)| <= n < |v^(M+1)|.
BigInt v_b_count_simple(const Morphism& m, const BigInt& n, StageIndex v_stage);

// Throws StageMismatch unless |w^(N)| <= n < |w^(N+1)|.
BigInt w_b_count_simple(const Morphism& m, const BigInt& n, StageIndex w_stage);

}  // namespace parryac

#endif  // PARRYAC_EXTREMAL_HPP
