#pragma once

#include "fqsum/hypergeometric.hpp"

#include <array>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace fqsum {

class UnknownIdentityError : public std::invalid_argument {
 public:
  explicit UnknownIdentityError(std::string_view id)
      : std::invalid_argument("unknown identity '" + std::string(id) + "'") {}
};

enum class ParamKind { Character, Element };

// Restriction on an element parameter. Characters always range over the full group.
enum class ElementDomain { Full, NotOne, NotZeroOne };

struct ParamSpec {
  std::string name;
  ParamKind kind = ParamKind::Character;
  ElementDomain domain = ElementDomain::Full;
};

// One binding of an identity's parameters, handed to its side evaluators.
// Characters come first in declaration order, then elements.
class Args {
 public:
  Args(const SumContext& ctx, std::span<const Character> chars, std::span<const FieldElement> elems,
       bool mutated)
      : ctx_(ctx), chars_(chars), elems_(elems), mutated_(mutated) {}

  const SumContext& ctx() const { return ctx_; }
  bool mutated() const { return mutated_; }

  template <std::size_t N>
  std::array<Character, N> chars() const {
    std::array<Character, N> out;
    for (std::size_t i = 0; i < N; ++i) out[i] = chars_[i];
    return out;
  }
  template <std::size_t N>
  std::array<FieldElement, N> elems() const {
    std::array<FieldElement, N> out;
    for (std::size_t i = 0; i < N; ++i) out[i] = elems_[i];
    return out;
  }

 private:
  const SumContext& ctx_;
  std::span<const Character> chars_;
  std::span<const FieldElement> elems_;
  bool mutated_;
};

using SideFn = std::function<CycInt(const Args&)>;

enum class DivisibleSide { None, Lhs, Rhs };

struct IdentityCase {
  std::string id;
  std::string statement;
  std::vector<ParamSpec> params;
  // Both sides already multiplied through by (q-1)^clearing_power.
  SideFn lhs;
  SideFn rhs;
  unsigned clearing_power = 0;
  // Side that is a raw character sum and must be divisible by (q-1)^clearing_power.
  DivisibleSide divisible = DivisibleSide::None;
  // The single token that Args::mutated() flips inside rhs.
  std::string mutation;

  std::size_t character_count() const;
  std::size_t element_count() const;
  // Number of bindings in the declared domain.
  std::uint64_t domain_size(std::uint32_t q) const;
};

const std::vector<IdentityCase>& registry();
const IdentityCase& find_identity(std::string_view id);

enum class VerifyMode { Exhaustive, Sampled };

struct VerifyOptions {
  VerifyMode mode = VerifyMode::Exhaustive;
  std::uint64_t samples = 10000;
  std::uint64_t seed = 0;
  unsigned jobs = 1;
  std::size_t max_counterexamples = 10;
  // Evaluate the mutated right-hand side instead of the registered one.
  bool mutated = false;
};

struct Counterexample {
  // Binding position in enumeration (exhaustive) or sample number (sampled).
  std::uint64_t ordinal = 0;
  // Character exponents then element enumeration indices, in parameter order.
  std::vector<std::uint32_t> values;
  std::optional<CycInt> lhs;
  std::optional<CycInt> rhs;
  std::string reason;  // "mismatch", "not-divisible", or an evaluation error
};

struct VerifyReport {
  std::string id;
  std::uint32_t q = 0;
  VerifyMode mode = VerifyMode::Exhaustive;
  std::optional<std::uint64_t> seed;
  bool mutated = false;
  std::uint64_t cases = 0;
  std::uint64_t failures = 0;
  // Bindings whose raw character sum was not divisible by the clearing factor.
  std::uint64_t not_divisible = 0;
  std::vector<std::string> param_names;
  std::vector<Counterexample> counterexamples;
  std::optional<std::string> error;
  double wall_ms = 0.0;

  bool passed() const { return !error && failures == 0; }
};

VerifyReport verify(const IdentityCase& identity, const SumContext& ctx, const VerifyOptions& options);
VerifyReport verify(std::string_view id, const SumContext& ctx, const VerifyOptions& options);
// Runs every registry entry in registry order; per-entry errors are recorded
// in that entry's report.
std::vector<VerifyReport> verify_all(const SumContext& ctx, const VerifyOptions& options);

}  // namespace fqsum
