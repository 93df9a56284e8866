#pragma once

#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "fuzzlat/error.hpp"

namespace fuzzlat {

// Raw builder input for a residuated lattice: element names plus dense
// operation tables, row-major in element-list order, entries as element
// indices.
struct LatticeTables {
  std::vector<std::string> elements;
  std::vector<std::vector<int>> meet, join, tensor, impl;
  int bot = 0;
  int top = 0;
};

struct Witness {
  std::vector<std::string> items; // element/degree names involved
  std::string detail;
};

struct AxiomCheck {
  std::string axiom;
  bool pass = true;
  std::optional<Witness> witness; // first counterexample
};

struct AxiomReport {
  std::vector<AxiomCheck> checks;

  bool all_pass() const;
  const AxiomCheck* first_failure() const;
  std::string summary() const;
};

class AxiomError : public Error {
public:
  explicit AxiomError(AxiomReport report);
  const AxiomReport& report() const noexcept { return report_; }

private:
  AxiomReport report_;
};

enum class ChainKind { Lukasiewicz, Godel, Goguen };

namespace detail {
struct LatticeData;
}

// A truth degree: an index into the element list of its owning lattice.
// Mixing degrees of distinct lattice instances is an input error.
struct Degree {
  int index = -1;
  const detail::LatticeData* owner = nullptr;

  bool operator==(const Degree&) const = default;
};

// Finite complete residuated lattice. Immutable after construction; handles
// are cheap to copy and share the underlying tables, so degrees remain owned
// by every copy of the lattice they came from.
class ResiduatedLattice {
public:
  // Equidistant chain 0 < 1/(n-1) < ... < 1 with the standard connectives,
  // realized with exact index arithmetic. Goguen is accepted only for n = 2
  // (the Boolean case): for n > 2 the residuum b/a leaves the grid.
  static ResiduatedLattice chain(ChainKind kind, int n);

  // The two-element Boolean lattice; identical tables to chain(*, 2).
  static ResiduatedLattice boolean();

  // Builds from explicit tables; rejects with an AxiomError naming the axiom
  // and a witnessing triple unless verify_axioms passes.
  static ResiduatedLattice from_tables(const LatticeTables& t);

  int size() const;
  Degree at(int index) const;
  std::optional<Degree> find(std::string_view name) const;
  Degree by_name(std::string_view name) const; // throws when absent
  Degree bot() const;
  Degree top() const;
  const std::string& name(int index) const;
  const std::string& name(Degree d) const;

  // Index-level operations without ownership checks, for sweeps.
  int meet_i(int a, int b) const;
  int join_i(int a, int b) const;
  int tensor_i(int a, int b) const;
  int impl_i(int a, int b) const;
  int bires_i(int a, int b) const;
  bool leq_i(int a, int b) const;
  int bot_i() const;
  int top_i() const;

  const LatticeTables& tables() const;
  bool owns(Degree d) const;
  void require_owned(Degree d) const;

  // Table-content equality (two independently built lattices may agree).
  bool same_algebra(const ResiduatedLattice& other) const;
  // Identity: both handles share one instance.
  bool same_instance(const ResiduatedLattice& other) const;

  const detail::LatticeData* id() const;

private:
  explicit ResiduatedLattice(std::shared_ptr<const detail::LatticeData> d);
  std::shared_ptr<const detail::LatticeData> data_;
};

// Exhaustive axiom scan: lattice axioms, monoid axioms, adjointness.
// Failures are data, not errors.
AxiomReport verify_axioms(const LatticeTables& t);
AxiomReport verify_axioms(const ResiduatedLattice& L);

Degree meet(Degree a, Degree b);
Degree join(Degree a, Degree b);
Degree tensor(Degree a, Degree b);
Degree impl(Degree a, Degree b);
Degree biresiduum(Degree a, Degree b);
bool leq(Degree a, Degree b);

// Empty folds: big_meet yields top, big_join yields bot.
Degree big_meet(const ResiduatedLattice& L, std::span<const Degree> ds);
Degree big_join(const ResiduatedLattice& L, std::span<const Degree> ds);

} // namespace fuzzlat
