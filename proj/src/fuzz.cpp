#include "fuzzlat/fuzz.hpp"

#include <algorithm>
#include <sstream>

#include "fuzzlat/budget.hpp"

namespace fuzzlat {

int Universe::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < elements.size(); ++i)
    if (elements[i] == name) return int(i);
  return -1;
}

int Universe::require(std::string_view name) const {
  int i = index_of(name);
  if (i < 0) throw_input("unknown universe element '" + std::string(name) + "'");
  return i;
}

UniversePtr make_universe(std::vector<std::string> elements) {
  for (std::size_t i = 0; i < elements.size(); ++i)
    for (std::size_t j = i + 1; j < elements.size(); ++j)
      if (elements[i] == elements[j])
        throw_input("duplicate universe element '" + elements[i] + "'");
  return std::make_shared<const Universe>(Universe{std::move(elements)});
}

bool same_universe(const UniversePtr& a, const UniversePtr& b) {
  if (a.get() == b.get()) return true;
  if (!a || !b) return false;
  return *a == *b;
}

namespace {

void require_same_universe(const UniversePtr& a, const UniversePtr& b,
                           const char* what) {
  if (!same_universe(a, b)) throw_input(std::string(what) + ": universe mismatch");
}

void require_same_lattice(const ResiduatedLattice& a,
                          const ResiduatedLattice& b) {
  if (!a.same_instance(b)) throw_input("operands use different lattices");
}

} // namespace

LSet::LSet(ResiduatedLattice lat, UniversePtr uni, std::vector<int> memb)
    : lat_(std::move(lat)), uni_(std::move(uni)), memb_(std::move(memb)) {
  if (!uni_) throw_input("LSet: null universe");
  if (int(memb_.size()) != uni_->size())
    throw_input("LSet membership is not total over the universe");
  for (int d : memb_)
    if (d < 0 || d >= lat_.size()) throw_input("LSet degree index out of range");
}

LSet LSet::constant(const ResiduatedLattice& lat, UniversePtr uni, Degree a) {
  lat.require_owned(a);
  int n = uni->size();
  return LSet(lat, std::move(uni), std::vector<int>(n, a.index));
}

LSet LSet::empty(const ResiduatedLattice& lat, UniversePtr uni) {
  int n = uni->size();
  return LSet(lat, std::move(uni), std::vector<int>(n, lat.bot_i()));
}

LSet LSet::crisp(const ResiduatedLattice& lat, UniversePtr uni,
                 std::span<const int> members) {
  std::vector<int> m(uni->size(), lat.bot_i());
  for (int i : members) {
    if (i < 0 || i >= uni->size()) throw_input("crisp member index out of range");
    m[i] = lat.top_i();
  }
  return LSet(lat, std::move(uni), std::move(m));
}

Degree LSet::operator()(int i) const { return lat_.at(memb_.at(i)); }

Degree LSet::at_name(std::string_view element) const {
  return (*this)(uni_->require(element));
}

bool LSet::is_crisp() const {
  for (int d : memb_)
    if (d != lat_.bot_i() && d != lat_.top_i()) return false;
  return true;
}

std::string LSet::to_string() const {
  std::ostringstream os;
  os << "{";
  for (int i = 0; i < size(); ++i) {
    if (i) os << ", ";
    os << uni_->elements[i] << ":" << lat_.name(memb_[i]);
  }
  os << "}";
  return os.str();
}

bool LSet::operator==(const LSet& other) const {
  return lat_.same_instance(other.lat_) && same_universe(uni_, other.uni_) &&
         memb_ == other.memb_;
}

LRelation::LRelation(ResiduatedLattice lat, UniversePtr src, UniversePtr tgt,
                     std::vector<int> row_major)
    : lat_(std::move(lat)), src_(std::move(src)), tgt_(std::move(tgt)),
      m_(std::move(row_major)) {
  if (!src_ || !tgt_) throw_input("LRelation: null universe");
  if (m_.size() != std::size_t(src_->size()) * std::size_t(tgt_->size()))
    throw_input("LRelation matrix is not total");
  for (int d : m_)
    if (d < 0 || d >= lat_.size())
      throw_input("LRelation degree index out of range");
}

LRelation LRelation::constant(const ResiduatedLattice& lat, UniversePtr src,
                              UniversePtr tgt, Degree a) {
  lat.require_owned(a);
  std::size_t n = std::size_t(src->size()) * std::size_t(tgt->size());
  return LRelation(lat, std::move(src), std::move(tgt),
                   std::vector<int>(n, a.index));
}

LRelation LRelation::identity(const ResiduatedLattice& lat, UniversePtr uni) {
  int n = uni->size();
  std::vector<int> m(std::size_t(n) * n, lat.bot_i());
  for (int i = 0; i < n; ++i) m[std::size_t(i) * n + i] = lat.top_i();
  return LRelation(lat, uni, uni, std::move(m));
}

bool LRelation::square() const { return same_universe(src_, tgt_); }

Degree LRelation::operator()(int x, int y) const {
  if (x < 0 || x >= rows() || y < 0 || y >= cols())
    throw_input("relation index out of range");
  return lat_.at(at_i(x, y));
}

std::string LRelation::to_string() const {
  std::ostringstream os;
  os << "[";
  for (int x = 0; x < rows(); ++x) {
    if (x) os << "; ";
    for (int y = 0; y < cols(); ++y) {
      if (y) os << ",";
      os << lat_.name(at_i(x, y));
    }
  }
  os << "]";
  return os.str();
}

bool LRelation::operator==(const LRelation& other) const {
  return lat_.same_instance(other.lat_) && same_universe(src_, other.src_) &&
         same_universe(tgt_, other.tgt_) && m_ == other.m_;
}

Degree subsethood(const LSet& A, const LSet& B) {
  require_same_lattice(A.lattice(), B.lattice());
  require_same_universe(A.universe_ptr(), B.universe_ptr(), "subsethood");
  const ResiduatedLattice& L = A.lattice();
  int acc = L.top_i();
  for (int i = 0; i < A.size(); ++i)
    acc = L.meet_i(acc, L.impl_i(A.memb_i(i), B.memb_i(i)));
  return L.at(acc);
}

Degree similarity(const LSet& A, const LSet& B) {
  return meet(subsethood(A, B), subsethood(B, A));
}

LRelation compose(const LRelation& R, const LRelation& T) {
  require_same_lattice(R.lattice(), T.lattice());
  require_same_universe(R.target_ptr(), T.source_ptr(), "compose");
  const ResiduatedLattice& L = R.lattice();
  int nx = R.rows(), ny = R.cols(), nz = T.cols();
  std::vector<int> m(std::size_t(nx) * nz, L.bot_i());
  for (int x = 0; x < nx; ++x)
    for (int z = 0; z < nz; ++z) {
      int acc = L.bot_i();
      for (int y = 0; y < ny; ++y)
        acc = L.join_i(acc, L.tensor_i(R.at_i(x, y), T.at_i(y, z)));
      m[std::size_t(x) * nz + z] = acc;
    }
  return LRelation(L, R.source_ptr(), T.target_ptr(), std::move(m));
}

LSet compose(const LSet& A, const LRelation& R) {
  require_same_lattice(A.lattice(), R.lattice());
  require_same_universe(A.universe_ptr(), R.source_ptr(), "compose");
  const ResiduatedLattice& L = A.lattice();
  std::vector<int> m(R.cols(), L.bot_i());
  for (int y = 0; y < R.cols(); ++y) {
    int acc = L.bot_i();
    for (int x = 0; x < A.size(); ++x)
      acc = L.join_i(acc, L.tensor_i(A.memb_i(x), R.at_i(x, y)));
    m[y] = acc;
  }
  return LSet(L, R.target_ptr(), std::move(m));
}

LSet compose(const LRelation& R, const LSet& B) {
  require_same_lattice(R.lattice(), B.lattice());
  require_same_universe(R.target_ptr(), B.universe_ptr(), "compose");
  const ResiduatedLattice& L = R.lattice();
  std::vector<int> m(R.rows(), L.bot_i());
  for (int x = 0; x < R.rows(); ++x) {
    int acc = L.bot_i();
    for (int y = 0; y < B.size(); ++y)
      acc = L.join_i(acc, L.tensor_i(R.at_i(x, y), B.memb_i(y)));
    m[x] = acc;
  }
  return LSet(L, R.source_ptr(), std::move(m));
}

Degree compose(const LSet& A, const LSet& B) {
  require_same_lattice(A.lattice(), B.lattice());
  require_same_universe(A.universe_ptr(), B.universe_ptr(), "compose");
  const ResiduatedLattice& L = A.lattice();
  int acc = L.bot_i();
  for (int i = 0; i < A.size(); ++i)
    acc = L.join_i(acc, L.tensor_i(A.memb_i(i), B.memb_i(i)));
  return L.at(acc);
}

LRelation inverse(const LRelation& R) {
  const ResiduatedLattice& L = R.lattice();
  std::vector<int> m(std::size_t(R.cols()) * R.rows());
  for (int x = 0; x < R.rows(); ++x)
    for (int y = 0; y < R.cols(); ++y)
      m[std::size_t(y) * R.rows() + x] = R.at_i(x, y);
  return LRelation(L, R.target_ptr(), R.source_ptr(), std::move(m));
}

std::vector<int> a_cut(const LSet& A, Degree a) {
  A.lattice().require_owned(a);
  std::vector<int> out;
  for (int i = 0; i < A.size(); ++i)
    if (A.lattice().leq_i(a.index, A.memb_i(i))) out.push_back(i);
  return out;
}

std::vector<int> a_cut(const LRelation& R, Degree a) {
  R.lattice().require_owned(a);
  std::vector<int> out;
  for (std::size_t k = 0; k < R.entries().size(); ++k)
    if (R.lattice().leq_i(a.index, R.entries()[k])) out.push_back(int(k));
  return out;
}

LSet scalar_tensor(Degree a, const LSet& A) {
  A.lattice().require_owned(a);
  const ResiduatedLattice& L = A.lattice();
  std::vector<int> m(A.size());
  for (int i = 0; i < A.size(); ++i) m[i] = L.tensor_i(a.index, A.memb_i(i));
  return LSet(L, A.universe_ptr(), std::move(m));
}

LSet scalar_shift(Degree a, const LSet& A) {
  A.lattice().require_owned(a);
  const ResiduatedLattice& L = A.lattice();
  std::vector<int> m(A.size());
  for (int i = 0; i < A.size(); ++i) m[i] = L.impl_i(a.index, A.memb_i(i));
  return LSet(L, A.universe_ptr(), std::move(m));
}

LRelation scalar_shift(Degree a, const LRelation& R) {
  R.lattice().require_owned(a);
  const ResiduatedLattice& L = R.lattice();
  std::vector<int> m(R.entries().begin(), R.entries().end());
  for (int& d : m) d = L.impl_i(a.index, d);
  return LRelation(L, R.source_ptr(), R.target_ptr(), std::move(m));
}

LSet intersect(const LSet& A, const LSet& B) {
  require_same_lattice(A.lattice(), B.lattice());
  require_same_universe(A.universe_ptr(), B.universe_ptr(), "intersect");
  const ResiduatedLattice& L = A.lattice();
  std::vector<int> m(A.size());
  for (int i = 0; i < A.size(); ++i) m[i] = L.meet_i(A.memb_i(i), B.memb_i(i));
  return LSet(L, A.universe_ptr(), std::move(m));
}

LSet unite(const LSet& A, const LSet& B) {
  require_same_lattice(A.lattice(), B.lattice());
  require_same_universe(A.universe_ptr(), B.universe_ptr(), "unite");
  const ResiduatedLattice& L = A.lattice();
  std::vector<int> m(A.size());
  for (int i = 0; i < A.size(); ++i) m[i] = L.join_i(A.memb_i(i), B.memb_i(i));
  return LSet(L, A.universe_ptr(), std::move(m));
}

LRelation intersect(const LRelation& A, const LRelation& B) {
  require_same_lattice(A.lattice(), B.lattice());
  require_same_universe(A.source_ptr(), B.source_ptr(), "intersect");
  require_same_universe(A.target_ptr(), B.target_ptr(), "intersect");
  const ResiduatedLattice& L = A.lattice();
  std::vector<int> m(A.entries().begin(), A.entries().end());
  for (std::size_t k = 0; k < m.size(); ++k)
    m[k] = L.meet_i(m[k], B.entries()[k]);
  return LRelation(L, A.source_ptr(), A.target_ptr(), std::move(m));
}

bool pointwise_leq(const LSet& A, const LSet& B) {
  require_same_lattice(A.lattice(), B.lattice());
  require_same_universe(A.universe_ptr(), B.universe_ptr(), "pointwise_leq");
  for (int i = 0; i < A.size(); ++i)
    if (!A.lattice().leq_i(A.memb_i(i), B.memb_i(i))) return false;
  return true;
}

LSet zadeh_image(std::span<const int> f, const UniversePtr& target,
                 const LSet& A) {
  if (int(f.size()) != A.size())
    throw_input("zadeh_image: map is not total on the source universe");
  const ResiduatedLattice& L = A.lattice();
  std::vector<int> m(target->size(), L.bot_i());
  for (int x = 0; x < A.size(); ++x) {
    int y = f[x];
    if (y < 0 || y >= target->size())
      throw_input("zadeh_image: map value out of target range");
    m[y] = L.join_i(m[y], A.memb_i(x));
  }
  return LSet(L, target, std::move(m));
}

PropertyReport relation_properties(const LRelation& R) {
  if (!R.square()) throw_input("relation_properties requires a square relation");
  const ResiduatedLattice& L = R.lattice();
  const Universe& U = R.source();
  int n = U.size();
  PropertyReport rep;

  for (int x = 0; x < n && rep.reflexive; ++x)
    if (R.at_i(x, x) != L.top_i()) {
      rep.reflexive = false;
      rep.reflexive_witness =
          Witness{{U.elements[x]},
                  "R(" + U.elements[x] + "," + U.elements[x] +
                      ") = " + L.name(R.at_i(x, x)) + " != 1"};
    }
  for (int x = 0; x < n && rep.symmetric; ++x)
    for (int y = 0; y < n && rep.symmetric; ++y)
      if (R.at_i(x, y) != R.at_i(y, x)) {
        rep.symmetric = false;
        rep.symmetric_witness =
            Witness{{U.elements[x], U.elements[y]},
                    "R(" + U.elements[x] + "," + U.elements[y] + ") = " +
                        L.name(R.at_i(x, y)) + " differs from R(" +
                        U.elements[y] + "," + U.elements[x] + ") = " +
                        L.name(R.at_i(y, x))};
      }
  for (int x = 0; x < n && rep.transitive; ++x)
    for (int y = 0; y < n && rep.transitive; ++y)
      for (int z = 0; z < n && rep.transitive; ++z) {
        int lhs = L.tensor_i(R.at_i(x, y), R.at_i(y, z));
        if (!L.leq_i(lhs, R.at_i(x, z))) {
          rep.transitive = false;
          rep.transitive_witness = Witness{
              {U.elements[x], U.elements[y], U.elements[z]},
              "R(" + U.elements[x] + "," + U.elements[y] + ") (x) R(" +
                  U.elements[y] + "," + U.elements[z] + ") = " + L.name(lhs) +
                  " !<= R(" + U.elements[x] + "," + U.elements[z] +
                  ") = " + L.name(R.at_i(x, z))};
        }
      }

  rep.tolerance = rep.reflexive && rep.symmetric;
  rep.equivalence = rep.tolerance && rep.transitive;

  bool separating = true;
  for (int x = 0; x < n && separating; ++x)
    for (int y = 0; y < n && separating; ++y)
      if (x != y && R.at_i(x, y) == L.top_i()) {
        separating = false;
        rep.separation_witness =
            Witness{{U.elements[x], U.elements[y]},
                    "R(" + U.elements[x] + "," + U.elements[y] +
                        ") = 1 for distinct elements"};
      }
  rep.equality = rep.equivalence && separating;
  return rep;
}

CompatResult is_compatible(const LSet& A, const LRelation& sim) {
  if (!sim.square()) throw_input("compatibility requires a square relation");
  require_same_universe(A.universe_ptr(), sim.source_ptr(), "is_compatible");
  const ResiduatedLattice& L = A.lattice();
  require_same_lattice(L, sim.lattice());
  const Universe& U = A.universe();
  int n = U.size();
  for (int x = 0; x < n; ++x)
    for (int x2 = 0; x2 < n; ++x2) {
      int lhs = L.tensor_i(A.memb_i(x), sim.at_i(x, x2));
      if (!L.leq_i(lhs, A.memb_i(x2)))
        return {false,
                Witness{{U.elements[x], U.elements[x2]},
                        "A(" + U.elements[x] + ") (x) ~(" + U.elements[x] +
                            "," + U.elements[x2] + ") = " + L.name(lhs) +
                            " !<= A(" + U.elements[x2] +
                            ") = " + L.name(A.memb_i(x2))}};
    }
  return {true, std::nullopt};
}

CompatResult is_compatible(const LRelation& R, const LRelation& sim) {
  if (!R.square() || !sim.square())
    throw_input("compatibility requires square relations");
  require_same_universe(R.source_ptr(), sim.source_ptr(), "is_compatible");
  const ResiduatedLattice& L = R.lattice();
  require_same_lattice(L, sim.lattice());
  const Universe& U = R.source();
  int n = U.size();
  for (int x = 0; x < n; ++x)
    for (int x2 = 0; x2 < n; ++x2)
      for (int y = 0; y < n; ++y)
        for (int y2 = 0; y2 < n; ++y2) {
          int lhs = L.tensor_i(L.tensor_i(R.at_i(x, y), sim.at_i(x, x2)),
                               sim.at_i(y, y2));
          if (!L.leq_i(lhs, R.at_i(x2, y2)))
            return {false,
                    Witness{{U.elements[x], U.elements[x2], U.elements[y],
                             U.elements[y2]},
                            "R(" + U.elements[x] + "," + U.elements[y] +
                                ") (x) ~(" + U.elements[x] + "," +
                                U.elements[x2] + ") (x) ~(" + U.elements[y] +
                                "," + U.elements[y2] + ") = " + L.name(lhs) +
                                " !<= R(" + U.elements[x2] + "," +
                                U.elements[y2] +
                                ") = " + L.name(R.at_i(x2, y2))}};
        }
  return {true, std::nullopt};
}

LSet decode_lset(const ResiduatedLattice& lat, const UniversePtr& uni,
                 std::size_t idx) {
  int n = lat.size();
  std::vector<int> m(uni->size());
  for (int k = 0; k < uni->size(); ++k) {
    m[k] = int(idx % n);
    idx /= n;
  }
  return LSet(lat, uni, std::move(m));
}

std::size_t encode_lset(const LSet& A) {
  std::size_t idx = 0;
  int n = A.lattice().size();
  for (int k = A.size() - 1; k >= 0; --k) idx = idx * n + std::size_t(A.memb_i(k));
  return idx;
}

std::size_t lset_count(const ResiduatedLattice& lat, const Universe& uni,
                       std::size_t cap) {
  auto c = checked_pow(std::size_t(lat.size()), std::size_t(uni.size()));
  if (!c || *c > cap)
    throw_budget("enumeration of " +
                 (c ? std::to_string(*c) : std::string("more than 2^62")) +
                 " = " + std::to_string(lat.size()) + "^" +
                 std::to_string(uni.size()) +
                 " L-sets exceeds the budget of " + std::to_string(cap));
  return *c;
}

LRelation decode_relation(const ResiduatedLattice& lat, const UniversePtr& uni,
                          std::size_t idx) {
  int n = lat.size();
  std::vector<int> m(std::size_t(uni->size()) * uni->size());
  for (std::size_t k = 0; k < m.size(); ++k) {
    m[k] = int(idx % n);
    idx /= n;
  }
  return LRelation(lat, uni, uni, std::move(m));
}

std::size_t relation_count(const ResiduatedLattice& lat, const Universe& uni,
                           std::size_t cap) {
  auto c = checked_pow(std::size_t(lat.size()),
                       std::size_t(uni.size()) * uni.size());
  if (!c || *c > cap)
    throw_budget("enumeration of " +
                 (c ? std::to_string(*c) : std::string("more than 2^62")) +
                 " = " + std::to_string(lat.size()) + "^" +
                 std::to_string(uni.size() * uni.size()) +
                 " relations exceeds the budget of " + std::to_string(cap));
  return *c;
}

} // namespace fuzzlat
