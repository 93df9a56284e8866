#pragma once

#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "fuzzlat/lattice.hpp"

namespace fuzzlat {

// Ordered list of element identifiers. Shared immutably between the sets and
// relations built over it; two universes match when their element lists agree.
struct Universe {
  std::vector<std::string> elements;

  int size() const { return int(elements.size()); }
  int index_of(std::string_view name) const;
  int require(std::string_view name) const;
  bool operator==(const Universe&) const = default;
};

using UniversePtr = std::shared_ptr<const Universe>;

UniversePtr make_universe(std::vector<std::string> elements);

bool same_universe(const UniversePtr& a, const UniversePtr& b);

// Total map from a finite universe into the degrees of one lattice.
class LSet {
public:
  LSet(ResiduatedLattice lat, UniversePtr uni, std::vector<int> memb);

  static LSet constant(const ResiduatedLattice& lat, UniversePtr uni, Degree a);
  static LSet empty(const ResiduatedLattice& lat, UniversePtr uni);
  // Crisp set from element indices.
  static LSet crisp(const ResiduatedLattice& lat, UniversePtr uni,
                    std::span<const int> members);

  int size() const { return int(memb_.size()); }
  int memb_i(int i) const { return memb_[i]; }
  Degree operator()(int i) const;
  Degree at_name(std::string_view element) const;
  std::span<const int> degrees() const { return memb_; }

  const ResiduatedLattice& lattice() const { return lat_; }
  const Universe& universe() const { return *uni_; }
  const UniversePtr& universe_ptr() const { return uni_; }

  bool is_crisp() const;
  std::string to_string() const; // "{x:1, y:1/2}"

  bool operator==(const LSet& other) const;

private:
  ResiduatedLattice lat_;
  UniversePtr uni_;
  std::vector<int> memb_;
};

// Binary L-relation between two universes; row = source element.
class LRelation {
public:
  LRelation(ResiduatedLattice lat, UniversePtr src, UniversePtr tgt,
            std::vector<int> row_major);

  static LRelation constant(const ResiduatedLattice& lat, UniversePtr src,
                            UniversePtr tgt, Degree a);
  static LRelation identity(const ResiduatedLattice& lat, UniversePtr uni);

  int rows() const { return int(src_->size()); }
  int cols() const { return int(tgt_->size()); }
  bool square() const;
  int at_i(int x, int y) const { return m_[x * cols() + y]; }
  Degree operator()(int x, int y) const;
  std::span<const int> entries() const { return m_; }

  const ResiduatedLattice& lattice() const { return lat_; }
  const UniversePtr& source_ptr() const { return src_; }
  const UniversePtr& target_ptr() const { return tgt_; }
  const Universe& source() const { return *src_; }
  const Universe& target() const { return *tgt_; }

  std::string to_string() const;

  bool operator==(const LRelation& other) const;

private:
  ResiduatedLattice lat_;
  UniversePtr src_, tgt_;
  std::vector<int> m_;
};

// Graded subsethood: meet of A(x) -> B(x); top on the empty universe.
Degree subsethood(const LSet& A, const LSet& B);
Degree similarity(const LSet& A, const LSet& B);

LRelation compose(const LRelation& R, const LRelation& T);
LSet compose(const LSet& A, const LRelation& R);
LSet compose(const LRelation& R, const LSet& B);
Degree compose(const LSet& A, const LSet& B);

LRelation inverse(const LRelation& R);

// Elements whose membership dominates a.
std::vector<int> a_cut(const LSet& A, Degree a);
std::vector<int> a_cut(const LRelation& R, Degree a); // flattened pair indices

LSet scalar_tensor(Degree a, const LSet& A);
LSet scalar_shift(Degree a, const LSet& A); // (a -> A)(x)
LRelation scalar_shift(Degree a, const LRelation& R);

LSet intersect(const LSet& A, const LSet& B);
LSet unite(const LSet& A, const LSet& B);
LRelation intersect(const LRelation& A, const LRelation& B);

// A(x) <= B(x) everywhere; equivalent to subsethood(A, B) = top.
bool pointwise_leq(const LSet& A, const LSet& B);

// f maps source indices to target indices; must be total on the source.
LSet zadeh_image(std::span<const int> f, const UniversePtr& target,
                 const LSet& A);

struct PropertyReport {
  bool reflexive = true, symmetric = true, transitive = true;
  bool tolerance = false, equivalence = false, equality = false;
  std::optional<Witness> reflexive_witness, symmetric_witness,
      transitive_witness, separation_witness;
};

// Crisp classification of a square relation.
PropertyReport relation_properties(const LRelation& R);

struct CompatResult {
  bool compatible = true;
  std::optional<Witness> witness;
};

// A(x) (x) (x~x') <= A(x') for all x, x'.
CompatResult is_compatible(const LSet& A, const LRelation& sim);
// R(x,y) (x) (x~x') (x) (y~y') <= R(x',y') for all quadruples.
CompatResult is_compatible(const LRelation& R, const LRelation& sim);

// Canonical enumeration of L-sets over a universe: index digit k (base |L|)
// is the membership of element k, element 0 varying fastest.
LSet decode_lset(const ResiduatedLattice& lat, const UniversePtr& uni,
                 std::size_t idx);
std::size_t encode_lset(const LSet& A);
std::size_t lset_count(const ResiduatedLattice& lat, const Universe& uni,
                       std::size_t cap); // throws Budget error past cap

// Same scheme for square relations (entry (x,y) is digit x*n+y).
LRelation decode_relation(const ResiduatedLattice& lat, const UniversePtr& uni,
                          std::size_t idx);
std::size_t relation_count(const ResiduatedLattice& lat, const Universe& uni,
                           std::size_t cap);

} // namespace fuzzlat
