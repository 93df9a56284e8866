#include "fuzzlat/lattice.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <unordered_map>

namespace fuzzlat {

namespace detail {

struct LatticeData {
  LatticeTables tables;
  int n = 0;
  // flattened row-major copies of the tables
  std::vector<int> meet, join, tensor, impl;
  std::unordered_map<std::string, int> index;
};

} // namespace detail

using detail::LatticeData;

bool AxiomReport::all_pass() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const AxiomCheck& c) { return c.pass; });
}

const AxiomCheck* AxiomReport::first_failure() const {
  for (const auto& c : checks)
    if (!c.pass) return &c;
  return nullptr;
}

std::string AxiomReport::summary() const {
  std::ostringstream os;
  for (const auto& c : checks) {
    os << (c.pass ? "pass " : "FAIL ") << c.axiom;
    if (c.witness) os << " [" << c.witness->detail << "]";
    os << "\n";
  }
  return os.str();
}

AxiomError::AxiomError(AxiomReport report)
    : Error(ErrorKind::Input,
            report.first_failure()
                ? "axiom failure: " + report.first_failure()->axiom +
                      (report.first_failure()->witness
                           ? " (" + report.first_failure()->witness->detail + ")"
                           : "")
                : "axiom failure"),
      report_(std::move(report)) {}

namespace {

std::string chain_element_name(int i, int denom) {
  if (i == 0) return "0";
  if (i == denom) return "1";
  int g = std::gcd(i, denom);
  return std::to_string(i / g) + "/" + std::to_string(denom / g);
}

std::vector<std::vector<int>> make_table(int n, auto&& f) {
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) t[i][j] = f(i, j);
  return t;
}

void flatten(const std::vector<std::vector<int>>& t, std::vector<int>& out) {
  out.clear();
  for (const auto& row : t) out.insert(out.end(), row.begin(), row.end());
}

void check_shape(const LatticeTables& t) {
  const std::size_t n = t.elements.size();
  if (n == 0) throw_input("lattice needs at least one element");
  std::unordered_map<std::string, int> seen;
  for (std::size_t i = 0; i < n; ++i) {
    if (t.elements[i].empty()) throw_input("empty element name");
    if (!seen.emplace(t.elements[i], int(i)).second)
      throw_input("duplicate element name '" + t.elements[i] + "'");
  }
  auto check_table = [&](const std::vector<std::vector<int>>& tab,
                         const char* what) {
    if (tab.size() != n)
      throw_input(std::string(what) + " table is not total: " +
                  std::to_string(tab.size()) + " rows for " +
                  std::to_string(n) + " elements");
    for (const auto& row : tab) {
      if (row.size() != n)
        throw_input(std::string(what) + " table row is not total");
      for (int v : row)
        if (v < 0 || std::size_t(v) >= n)
          throw_input(std::string(what) + " table entry out of range");
    }
  };
  check_table(t.meet, "meet");
  check_table(t.join, "join");
  check_table(t.tensor, "tensor");
  check_table(t.impl, "impl");
  if (t.bot < 0 || std::size_t(t.bot) >= n) throw_input("bot out of range");
  if (t.top < 0 || std::size_t(t.top) >= n) throw_input("top out of range");
}

std::shared_ptr<const LatticeData> make_data(LatticeTables t) {
  check_shape(t);
  auto d = std::make_shared<LatticeData>();
  d->n = int(t.elements.size());
  flatten(t.meet, d->meet);
  flatten(t.join, d->join);
  flatten(t.tensor, d->tensor);
  flatten(t.impl, d->impl);
  for (int i = 0; i < d->n; ++i) d->index.emplace(t.elements[i], i);
  d->tables = std::move(t);
  return d;
}

} // namespace

ResiduatedLattice::ResiduatedLattice(std::shared_ptr<const LatticeData> d)
    : data_(std::move(d)) {}

ResiduatedLattice ResiduatedLattice::chain(ChainKind kind, int n) {
  if (n < 2) throw_input("chain size must be at least 2, got " + std::to_string(n));
  if (kind == ChainKind::Goguen && n > 2)
    throw_input("goguen chains are only representable for n = 2: the residuum "
                "b/a leaves the grid {0, 1/(n-1), ..., 1}; supply explicit "
                "closed tables instead");
  const int m = n - 1;
  LatticeTables t;
  t.elements.reserve(n);
  for (int i = 0; i < n; ++i) t.elements.push_back(chain_element_name(i, m));
  t.meet = make_table(n, [](int i, int j) { return std::min(i, j); });
  t.join = make_table(n, [](int i, int j) { return std::max(i, j); });
  if (kind == ChainKind::Godel) {
    t.tensor = make_table(n, [](int i, int j) { return std::min(i, j); });
    t.impl = make_table(n, [m](int i, int j) { return i <= j ? m : j; });
  } else {
    t.tensor = make_table(n, [m](int i, int j) { return std::max(i + j - m, 0); });
    t.impl = make_table(n, [m](int i, int j) { return std::min(m - i + j, m); });
  }
  t.bot = 0;
  t.top = m;
  return ResiduatedLattice(make_data(std::move(t)));
}

ResiduatedLattice ResiduatedLattice::boolean() {
  return chain(ChainKind::Lukasiewicz, 2);
}

ResiduatedLattice ResiduatedLattice::from_tables(const LatticeTables& t) {
  AxiomReport report = verify_axioms(t);
  if (!report.all_pass()) throw AxiomError(std::move(report));
  return ResiduatedLattice(make_data(t));
}

int ResiduatedLattice::size() const { return data_->n; }

Degree ResiduatedLattice::at(int index) const {
  if (index < 0 || index >= data_->n)
    throw_input("degree index " + std::to_string(index) + " out of range");
  return Degree{index, data_.get()};
}

std::optional<Degree> ResiduatedLattice::find(std::string_view name) const {
  auto it = data_->index.find(std::string(name));
  if (it == data_->index.end()) return std::nullopt;
  return Degree{it->second, data_.get()};
}

Degree ResiduatedLattice::by_name(std::string_view name) const {
  auto d = find(name);
  if (!d) throw_input("unknown degree name '" + std::string(name) + "'");
  return *d;
}

Degree ResiduatedLattice::bot() const { return Degree{data_->tables.bot, data_.get()}; }
Degree ResiduatedLattice::top() const { return Degree{data_->tables.top, data_.get()}; }

const std::string& ResiduatedLattice::name(int index) const {
  return data_->tables.elements.at(index);
}
const std::string& ResiduatedLattice::name(Degree d) const {
  require_owned(d);
  return data_->tables.elements[d.index];
}

int ResiduatedLattice::meet_i(int a, int b) const { return data_->meet[a * data_->n + b]; }
int ResiduatedLattice::join_i(int a, int b) const { return data_->join[a * data_->n + b]; }
int ResiduatedLattice::tensor_i(int a, int b) const { return data_->tensor[a * data_->n + b]; }
int ResiduatedLattice::impl_i(int a, int b) const { return data_->impl[a * data_->n + b]; }
int ResiduatedLattice::bires_i(int a, int b) const {
  return meet_i(impl_i(a, b), impl_i(b, a));
}
bool ResiduatedLattice::leq_i(int a, int b) const { return meet_i(a, b) == a; }
int ResiduatedLattice::bot_i() const { return data_->tables.bot; }
int ResiduatedLattice::top_i() const { return data_->tables.top; }

const LatticeTables& ResiduatedLattice::tables() const { return data_->tables; }

bool ResiduatedLattice::owns(Degree d) const {
  return d.owner == data_.get() && d.index >= 0 && d.index < data_->n;
}

void ResiduatedLattice::require_owned(Degree d) const {
  if (!owns(d))
    throw_input("degree is not owned by this lattice (cross-lattice mixing)");
}

bool ResiduatedLattice::same_algebra(const ResiduatedLattice& other) const {
  const LatticeTables& a = data_->tables;
  const LatticeTables& b = other.data_->tables;
  return a.elements == b.elements && a.meet == b.meet && a.join == b.join &&
         a.tensor == b.tensor && a.impl == b.impl && a.bot == b.bot &&
         a.top == b.top;
}

bool ResiduatedLattice::same_instance(const ResiduatedLattice& other) const {
  return data_.get() == other.data_.get();
}

const LatticeData* ResiduatedLattice::id() const { return data_.get(); }

namespace {

// Plain table evaluator over raw builder input, so that corrupted candidates
// can be scanned without constructing a lattice.
struct RawOps {
  const LatticeTables& t;
  int n;
  int meet(int a, int b) const { return t.meet[a][b]; }
  int join(int a, int b) const { return t.join[a][b]; }
  int tensor(int a, int b) const { return t.tensor[a][b]; }
  int impl(int a, int b) const { return t.impl[a][b]; }
  bool leq(int a, int b) const { return meet(a, b) == a; }
  const std::string& name(int i) const { return t.elements[i]; }
};

Witness pair_witness(const RawOps& ops, int a, int b, std::string detail) {
  return Witness{{ops.name(a), ops.name(b)}, std::move(detail)};
}

Witness triple_witness(const RawOps& ops, int a, int b, int c,
                       std::string detail) {
  return Witness{{ops.name(a), ops.name(b), ops.name(c)}, std::move(detail)};
}

void check_commutative(AxiomReport& r, const RawOps& ops, const char* id,
                       auto&& op) {
  AxiomCheck c{id, true, std::nullopt};
  for (int a = 0; a < ops.n && c.pass; ++a)
    for (int b = 0; b < ops.n && c.pass; ++b)
      if (op(a, b) != op(b, a)) {
        c.pass = false;
        c.witness = pair_witness(ops, a, b,
                                 std::string(id) + " fails at (" + ops.name(a) +
                                     "," + ops.name(b) + ")");
      }
  r.checks.push_back(std::move(c));
}

void check_associative(AxiomReport& r, const RawOps& ops, const char* id,
                       auto&& op) {
  AxiomCheck c{id, true, std::nullopt};
  for (int a = 0; a < ops.n && c.pass; ++a)
    for (int b = 0; b < ops.n && c.pass; ++b)
      for (int x = 0; x < ops.n && c.pass; ++x)
        if (op(op(a, b), x) != op(a, op(b, x))) {
          c.pass = false;
          c.witness = triple_witness(
              ops, a, b, x,
              std::string(id) + " fails at (" + ops.name(a) + "," +
                  ops.name(b) + "," + ops.name(x) + ")");
        }
  r.checks.push_back(std::move(c));
}

void check_idempotent(AxiomReport& r, const RawOps& ops, const char* id,
                      auto&& op) {
  AxiomCheck c{id, true, std::nullopt};
  for (int a = 0; a < ops.n && c.pass; ++a)
    if (op(a, a) != a) {
      c.pass = false;
      c.witness = Witness{{ops.name(a)},
                          std::string(id) + " fails at " + ops.name(a)};
    }
  r.checks.push_back(std::move(c));
}

} // namespace

AxiomReport verify_axioms(const LatticeTables& t) {
  check_shape(t);
  RawOps ops{t, int(t.elements.size())};
  AxiomReport r;

  auto meet = [&](int a, int b) { return ops.meet(a, b); };
  auto join = [&](int a, int b) { return ops.join(a, b); };
  auto tens = [&](int a, int b) { return ops.tensor(a, b); };

  check_commutative(r, ops, "meet-commutative", meet);
  check_associative(r, ops, "meet-associative", meet);
  check_idempotent(r, ops, "meet-idempotent", meet);
  check_commutative(r, ops, "join-commutative", join);
  check_associative(r, ops, "join-associative", join);
  check_idempotent(r, ops, "join-idempotent", join);

  {
    AxiomCheck c{"absorption", true, std::nullopt};
    for (int a = 0; a < ops.n && c.pass; ++a)
      for (int b = 0; b < ops.n && c.pass; ++b) {
        if (ops.meet(a, ops.join(a, b)) != a) {
          c.pass = false;
          c.witness = pair_witness(ops, a, b,
                                   "meet(a, join(a,b)) != a at (" +
                                       ops.name(a) + "," + ops.name(b) + ")");
        } else if (ops.join(a, ops.meet(a, b)) != a) {
          c.pass = false;
          c.witness = pair_witness(ops, a, b,
                                   "join(a, meet(a,b)) != a at (" +
                                       ops.name(a) + "," + ops.name(b) + ")");
        }
      }
    r.checks.push_back(std::move(c));
  }

  {
    AxiomCheck c{"bounds", true, std::nullopt};
    int m = 0, j = 0;
    for (int a = 1; a < ops.n; ++a) {
      m = ops.meet(m, a);
      j = ops.join(j, a);
    }
    if (m != t.bot) {
      c.pass = false;
      c.witness = Witness{{ops.name(m)},
                          "meet of all elements is " + ops.name(m) +
                              ", declared bot is " + ops.name(t.bot)};
    } else if (j != t.top) {
      c.pass = false;
      c.witness = Witness{{ops.name(j)},
                          "join of all elements is " + ops.name(j) +
                              ", declared top is " + ops.name(t.top)};
    }
    r.checks.push_back(std::move(c));
  }

  check_commutative(r, ops, "tensor-commutative", tens);
  check_associative(r, ops, "tensor-associative", tens);

  {
    AxiomCheck c{"tensor-unit", true, std::nullopt};
    for (int a = 0; a < ops.n && c.pass; ++a)
      if (ops.tensor(a, t.top) != a) {
        c.pass = false;
        c.witness = Witness{{ops.name(a)},
                            "tensor(" + ops.name(a) + ", " + ops.name(t.top) +
                                ") = " + ops.name(ops.tensor(a, t.top)) +
                                " != " + ops.name(a)};
      }
    r.checks.push_back(std::move(c));
  }

  {
    AxiomCheck c{"adjointness", true, std::nullopt};
    for (int a = 0; a < ops.n && c.pass; ++a)
      for (int b = 0; b < ops.n && c.pass; ++b)
        for (int x = 0; x < ops.n && c.pass; ++x) {
          bool lhs = ops.leq(ops.tensor(a, b), x);
          bool rhs = ops.leq(a, ops.impl(b, x));
          if (lhs != rhs) {
            c.pass = false;
            c.witness = triple_witness(
                ops, a, b, x,
                "tensor(" + ops.name(a) + "," + ops.name(b) +
                    (lhs ? ") <= " : ") !<= ") + ops.name(x) + " but " +
                    ops.name(a) + (rhs ? " <= impl(" : " !<= impl(") +
                    ops.name(b) + "," + ops.name(x) + ")");
          }
        }
    r.checks.push_back(std::move(c));
  }

  return r;
}

AxiomReport verify_axioms(const ResiduatedLattice& L) {
  return verify_axioms(L.tables());
}

namespace {

const LatticeData* common_owner(Degree a, Degree b) {
  if (a.owner == nullptr || b.owner == nullptr)
    throw_input("uninitialized degree");
  if (a.owner != b.owner)
    throw_input("degrees belong to different lattices");
  return a.owner;
}

} // namespace

Degree meet(Degree a, Degree b) {
  const LatticeData* d = common_owner(a, b);
  return Degree{d->meet[a.index * d->n + b.index], d};
}

Degree join(Degree a, Degree b) {
  const LatticeData* d = common_owner(a, b);
  return Degree{d->join[a.index * d->n + b.index], d};
}

Degree tensor(Degree a, Degree b) {
  const LatticeData* d = common_owner(a, b);
  return Degree{d->tensor[a.index * d->n + b.index], d};
}

Degree impl(Degree a, Degree b) {
  const LatticeData* d = common_owner(a, b);
  return Degree{d->impl[a.index * d->n + b.index], d};
}

Degree biresiduum(Degree a, Degree b) {
  return meet(impl(a, b), impl(b, a));
}

bool leq(Degree a, Degree b) { return meet(a, b) == a; }

Degree big_meet(const ResiduatedLattice& L, std::span<const Degree> ds) {
  Degree acc = L.top();
  for (Degree d : ds) {
    L.require_owned(d);
    acc = meet(acc, d);
  }
  return acc;
}

Degree big_join(const ResiduatedLattice& L, std::span<const Degree> ds) {
  Degree acc = L.bot();
  for (Degree d : ds) {
    L.require_owned(d);
    acc = join(acc, d);
  }
  return acc;
}

} // namespace fuzzlat
