#include "indrep/analysis.hpp"

#include "indrep/error.hpp"
#include "indrep/number_theory.hpp"

namespace indrep {

namespace {

std::uint64_t reduce_mod(const Cyclotomic& v, std::uint32_t e, std::uint64_t p, std::uint64_t z) {
  const Cyclotomic w = v.lifted(e);
  std::uint64_t acc = 0, zt = 1;
  for (const auto& c : w.coeffs()) {
    if (c != 0) {
      mpz_class num = c.get_num() % static_cast<unsigned long>(p);
      if (num < 0) num += static_cast<unsigned long>(p);
      mpz_class den = c.get_den() % static_cast<unsigned long>(p);
      const std::uint64_t term = num.get_ui() * invmod(den.get_ui(), p) % p;
      acc = (acc + term * zt) % p;
    }
    zt = zt * z % p;
  }
  return acc;
}

}  // namespace

GroupAnalysis::GroupAnalysis(GroupPtr G, const AnalysisOptions& opts)
    : group_(std::move(G)), table_(character_table(*group_)), real_(table_) {
  init(opts);
}

GroupAnalysis::GroupAnalysis(GroupPtr G, CharacterTable table, const AnalysisOptions& opts)
    : group_(std::move(G)), table_(std::move(table)), real_(table_) {
  if (table_.classes().count() != group_->nclasses() || table_.classes().group_order != group_->order())
    throw Error(ErrorCode::GroupMismatch, "character table belongs to another group");
  init(opts);
}

void GroupAnalysis::init(const AnalysisOptions& opts) {
  const FiniteGroup& G = *group_;
  const auto& cc = G.classes();
  pp_classes_.resize(cc.count());
  for (std::size_t c = 0; c < cc.count(); ++c) pp_classes_[c] = is_prime_power_or_one(cc.orders[c]);
  residuals_ = large_residuals(G);
  residual_dims_.assign(real_.size(), {});
  for (const auto& [p, R] : residuals_) {
    const auto d = irreducible_fixed_dims(R.set);
    for (std::size_t i = 0; i < real_.size(); ++i) residual_dims_[i].push_back(d[i]);
  }
  if (opts.build_lattice && G.order() <= opts.lattice_cap) {
    lattice_ = subgroup_lattice(G, opts.lattice_cap);
    lattice_dims_.assign(real_.size(), {});
    for (const auto& cls : lattice_->classes) {
      const auto d = irreducible_fixed_dims(cls.rep.set);
      for (std::size_t i = 0; i < real_.size(); ++i) lattice_dims_[i].push_back(d[i]);
    }
  }
  const auto e = static_cast<std::uint32_t>(G.exponent());
  prime_ = dixon_prime(G.order(), e, 100'000'000);
  zeta_mod_ = powmod(primitive_root(prime_), (prime_ - 1) / e, prime_);
  values_mod_.assign(real_.size(), std::vector<std::uint64_t>(cc.count()));
  for (std::size_t i = 0; i < real_.size(); ++i)
    for (std::size_t c = 0; c < cc.count(); ++c) values_mod_[i][c] = reduce_mod(real_[i].chi.values[c], e, prime_, zeta_mod_);
}

const SubgroupLattice& GroupAnalysis::lattice() const {
  if (!lattice_)
    throw Error(ErrorCode::LatticeCapExceeded, "subgroup lattice not available for order " + std::to_string(group_->order()));
  return *lattice_;
}

std::vector<std::uint64_t> GroupAnalysis::class_histogram(const ElementSet& K) const {
  std::vector<std::uint64_t> h(group_->nclasses(), 0);
  for (Elem k : K.elements()) ++h[group_->class_of(k)];
  return h;
}

std::vector<long long> GroupAnalysis::irreducible_fixed_dims(const ElementSet& K) const {
  if (K.universe() != group_->order()) throw Error(ErrorCode::NotSubgroup, "subgroup of another group");
  const auto h = class_histogram(K);
  std::vector<long long> out;
  out.reserve(real_.size());
  for (const auto& W : real_.list()) {
    Cyclotomic s;
    for (std::size_t c = 0; c < h.size(); ++c)
      if (h[c]) s += W.chi.values[c] * mpq_class(static_cast<unsigned long>(h[c]));
    const mpq_class d = s.rational() / static_cast<unsigned long>(K.size());
    if (d.get_den() != 1 || d < 0) throw Error(ErrorCode::NotIntegral, "fixed-point dimension is not a natural number");
    out.push_back(d.get_num().get_si());
  }
  return out;
}

const std::vector<std::vector<long long>>& GroupAnalysis::fixed_dim_table() const {
  lattice();
  return lattice_dims_;
}

std::vector<OrientationCheck> GroupAnalysis::orientation_for(const Subgroup& P, std::uint32_t tag) const {
  const FiniteGroup& G = *group_;
  const std::uint64_t p = prime_;
  const Subgroup N = normalizer(G, P);
  std::vector<OrientationCheck> out;
  for (Elem g : N.gens) {
    if (P.contains(g)) continue;
    OrientationCheck oc;
    oc.subgroup_class = tag;
    oc.g = g;
    oc.order = G.elem_order(g);
    const std::uint32_t o = oc.order;
    // hist[k][c] = #{x in P : g^k x in class c}
    std::vector<std::vector<std::uint64_t>> hist(o, std::vector<std::uint64_t>(G.nclasses(), 0));
    Elem gk = G.identity();
    for (std::uint32_t k = 0; k < o; ++k) {
      for (Elem x : P.elements()) ++hist[k][G.class_of(G.mul(gk, x))];
      gk = G.mul(gk, g);
    }
    const std::uint64_t zo = powmod(zeta_mod_, G.exponent() / o, p);
    const std::uint64_t inv_po = invmod(P.order() % p * (o % p) % p, p);
    for (std::size_t i = 0; i < real_.size(); ++i) {
      std::vector<std::uint64_t> t(o, 0);
      for (std::uint32_t k = 0; k < o; ++k)
        for (std::size_t c = 0; c < hist[k].size(); ++c)
          if (hist[k][c]) t[k] = (t[k] + hist[k][c] % p * values_mod_[i][c]) % p;
      long long total = 0, expo = 0;
      for (std::uint32_t j = 0; j < o; ++j) {
        const std::uint64_t w = powmod(zo, (o - j) % o, p);
        std::uint64_t acc = 0, wk = 1;
        for (std::uint32_t k = 0; k < o; ++k) {
          acc = (acc + t[k] * wk) % p;
          wk = wk * w % p;
        }
        const std::uint64_t m = acc * inv_po % p;
        if (m > static_cast<std::uint64_t>(real_[i].degree()))
          throw Error(ErrorCode::NotIntegral, "eigenvalue multiplicity out of range");
        total += static_cast<long long>(m);
        expo += static_cast<long long>(j) * static_cast<long long>(m);
      }
      const long long dimP = static_cast<long long>(t[0] * invmod(P.order() % p, p) % p);
      if (total != dimP) throw Error(ErrorCode::InternalInconsistency, "eigenvalue multiplicities do not sum to the dimension");
      oc.exponent.push_back(expo % o);
    }
    out.push_back(std::move(oc));
  }
  return out;
}

const std::vector<OrientationCheck>& GroupAnalysis::orientation_checks() const {
  std::call_once(orient_once_, [this] {
    const auto& L = lattice();
    for (std::uint32_t c : L.family_P()) {
      auto part = orientation_for(L.classes[c].rep, c);
      orient_.insert(orient_.end(), part.begin(), part.end());
    }
  });
  return orient_;
}

}  // namespace indrep
