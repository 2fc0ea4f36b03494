#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "pipn/canonical.hpp"
#include "pipn/diagram.hpp"
#include "pipn/perm.hpp"
#include "pipn/presentation.hpp"
#include "pipn/word.hpp"

namespace pipn {

  enum class FactorKind : std::uint8_t { rho, lambda };

  // rho_{p,q} or lambda_{p,q}.
  struct PairFactor {
    FactorKind kind;
    int        p;
    int        q;

    friend bool operator==(PairFactor const&, PairFactor const&) = default;
  };

  // The element factors[0] ... factors[k-1] . E_{e_set} . tail.
  struct FactorForm {
    int                     n = 3;
    std::vector<PairFactor> factors;
    IndexSet                e_set;
    Perm                    tail;

    static FactorForm identity(int n);

    std::vector<std::pair<int, int>> rho_factors() const;
    std::vector<std::pair<int, int>> lambda_factors() const;

    Word    to_word() const;
    Diagram value() const;

    friend bool operator==(FactorForm const&, FactorForm const&) = default;
  };

  // Rewrite-step budget; spend() throws FuelExhausted once it is used up.
  class Fuel {
   public:
    explicit Fuel(std::uint64_t budget) : _left(budget) {}

    void spend();

    std::uint64_t remaining() const noexcept {
      return _left;
    }

   private:
    std::uint64_t _left;
  };

  // 10 * (|w| + n)^2
  std::uint64_t default_fuel(Word const& w);

  // Each stage preserves the value.
  FactorForm to_factor_form(Word const& w, Fuel& fuel);
  // All rho factors before all lambda factors.
  FactorForm sort_factors(FactorForm f, Fuel& fuel);
  // Two rho factors (two lambda factors) are disjoint or share only their
  // first index.
  FactorForm dedupe_factors(FactorForm f, Fuel& fuel);
  // No rho anchor is a lambda target, no lambda anchor is a rho target, and
  // e_set misses every factor.
  FactorForm enforce_disjointness(FactorForm f, Fuel& fuel);
  // Groups by anchor; throws std::logic_error if f is not fully reduced.
  CanonicalWord assemble(FactorForm const& f);

  // The rewriting pipeline alone.
  CanonicalWord normalize_symbolic(Word const& w, std::uint64_t fuel);
  CanonicalWord normalize_symbolic(Word const& w);

  // normalize_symbolic followed by standardize, so that words with equal
  // values get identical canonical words.
  CanonicalWord normalize(Word const& w, std::uint64_t fuel);
  CanonicalWord normalize(Word const& w);

}  // namespace pipn
