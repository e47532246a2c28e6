#include "moufang/perm_group.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <unordered_map>

#include "moufang/errors.hpp"

namespace moufang {

// ---------------------------------------------------------------------------
// Bsgs

Bsgs::Bsgs(int degree, const std::vector<Permutation>& generators,
           const std::vector<int>& base_hint)
    : degree_(degree) {
  std::vector<Permutation> gens;
  for (const auto& g : generators) {
    if (g.degree() != degree_) throw DegreeMismatch(g.degree(), degree_);
    if (g.is_identity()) continue;
    if (std::find(gens.begin(), gens.end(), g) == gens.end()) gens.push_back(g);
  }

  for (int b : base_hint) {
    if (b < 0 || b >= degree_) throw InputError("base point out of range");
    bool seen = false;
    for (const auto& lv : levels_) seen = seen || lv.base_point == b;
    if (!seen) add_level(b);
  }
  // Every generator must move some base point, or the chain would not see it.
  for (const auto& g : gens) {
    bool moves = false;
    for (const auto& lv : levels_) moves = moves || g[lv.base_point] != lv.base_point;
    if (!moves) add_level(g.lowest_moved_point());
  }
  if (levels_.empty()) return;  // trivial group

  for (auto& g : gens) {
    for (auto& lv : levels_) {
      lv.gens.push_back(g);
      if (g[lv.base_point] != lv.base_point) break;  // deeper levels must fix this point
    }
  }
  for (auto& lv : levels_) recompute_orbit(lv);

  // Verify the chain bottom-up: every Schreier generator of level i must sift
  // through the levels below; a nonzero residue is a new strong generator.
  int i = static_cast<int>(levels_.size()) - 1;
  while (i >= 0) {
    bool added = false;
    for (size_t oi = 0; oi < levels_[i].orbit.size() && !added; ++oi) {
      for (size_t si = 0; si < levels_[i].gens.size() && !added; ++si) {
        const Permutation& s = levels_[i].gens[si];
        int from = levels_[i].orbit[oi];
        int to = s[from];
        Permutation schreier = compose(compose(levels_[i].transversal[oi], s),
                                       levels_[i].transversal[levels_[i].orbit_pos[to]].inverse());
        if (schreier.is_identity()) continue;
        auto [residue, j] = strip(std::move(schreier), static_cast<size_t>(i) + 1);
        if (residue.is_identity()) continue;
        if (j == levels_.size()) add_level(residue.lowest_moved_point());
        for (size_t l = static_cast<size_t>(i) + 1; l <= j; ++l) {
          levels_[l].gens.push_back(residue);
          recompute_orbit(levels_[l]);
        }
        i = static_cast<int>(j);
        added = true;
      }
    }
    if (!added) --i;
  }
}

void Bsgs::add_level(int base_point) {
  Level lv;
  lv.base_point = base_point;
  levels_.push_back(std::move(lv));
  recompute_orbit(levels_.back());
}

void Bsgs::recompute_orbit(Level& lv) {
  lv.orbit.clear();
  lv.transversal.clear();
  lv.orbit_pos.assign(degree_, -1);
  lv.orbit.push_back(lv.base_point);
  lv.orbit_pos[lv.base_point] = 0;
  lv.transversal.push_back(Permutation(degree_));
  for (size_t q = 0; q < lv.orbit.size(); ++q) {
    int p = lv.orbit[q];
    for (const auto& s : lv.gens) {
      int t = s[p];
      if (lv.orbit_pos[t] < 0) {
        lv.orbit_pos[t] = static_cast<int>(lv.orbit.size());
        lv.orbit.push_back(t);
        lv.transversal.push_back(compose(lv.transversal[q], s));
      }
    }
  }
}

std::pair<Permutation, size_t> Bsgs::strip(Permutation g, size_t from) const {
  for (size_t l = from; l < levels_.size(); ++l) {
    const Level& lv = levels_[l];
    int t = g[lv.base_point];
    int pos = lv.orbit_pos[t];
    if (pos < 0) return {std::move(g), l};
    g = compose(g, lv.transversal[pos].inverse());
  }
  return {std::move(g), levels_.size()};
}

std::uint64_t Bsgs::order() const {
  std::uint64_t n = 1;
  for (const auto& lv : levels_) {
    std::uint64_t k = lv.orbit.size();
    if (n > UINT64_MAX / k) throw SizeOverflow("group order exceeds 64 bits");
    n *= k;
  }
  return n;
}

bool Bsgs::contains(const Permutation& p) const {
  if (p.degree() != degree_) throw DegreeMismatch(p.degree(), degree_);
  auto [residue, level] = strip(p, 0);
  (void)level;
  return residue.is_identity();
}

std::vector<int> Bsgs::base() const {
  std::vector<int> b;
  for (const auto& lv : levels_) b.push_back(lv.base_point);
  return b;
}

std::vector<Permutation> Bsgs::stabilizer_generators(size_t k) const {
  std::vector<Permutation> out;
  for (size_t l = k; l < levels_.size(); ++l) {
    for (const auto& g : levels_[l].gens) {
      bool fixes_prefix = true;
      for (size_t m = 0; m < k && fixes_prefix; ++m) {
        fixes_prefix = g[levels_[m].base_point] == levels_[m].base_point;
      }
      if (fixes_prefix && std::find(out.begin(), out.end(), g) == out.end()) {
        out.push_back(g);
      }
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// PermutationGroup

PermutationGroup::PermutationGroup(int degree, std::vector<Permutation> generators,
                                   std::vector<int> base_hint)
    : degree_(degree), base_hint_(std::move(base_hint)) {
  if (degree_ <= 0) throw InputError("degree must be positive");
  for (auto& g : generators) {
    if (g.degree() != degree_) throw DegreeMismatch(g.degree(), degree_);
    if (g.is_identity()) continue;
    if (std::find(gens_.begin(), gens_.end(), g) == gens_.end()) gens_.push_back(std::move(g));
  }
}

PermutationGroup PermutationGroup::trivial(int degree) {
  return PermutationGroup(degree, {});
}

const Bsgs& PermutationGroup::bsgs() const {
  if (!bsgs_) bsgs_ = std::make_shared<const Bsgs>(degree_, gens_, base_hint_);
  return *bsgs_;
}

std::uint64_t PermutationGroup::order() const {
  if (elements_) return elements_->size();
  return bsgs().order();
}

bool PermutationGroup::member(const Permutation& p) const {
  return bsgs().contains(p);
}

const std::vector<Permutation>& PermutationGroup::elements(std::uint64_t limit) const {
  if (elements_) return *elements_;
  if (order() > limit) throw TooLarge("group too large to enumerate");
  std::set<Permutation> seen;
  std::vector<Permutation> queue;
  Permutation id(degree_);
  seen.insert(id);
  queue.push_back(id);
  for (size_t q = 0; q < queue.size(); ++q) {
    for (const auto& g : gens_) {
      Permutation next = compose(queue[q], g);
      if (seen.insert(next).second) queue.push_back(std::move(next));
    }
  }
  elements_ = std::make_shared<const std::vector<Permutation>>(seen.begin(), seen.end());
  return *elements_;
}

// ---------------------------------------------------------------------------
// Commutator identity scan

namespace {

Permutation identity1_rhs(const Permutation& x, const Permutation& y, const Permutation& z,
                          const Permutation& t) {
  Permutation yt = compose(y, t);
  Permutation r = conjugate(commutator(x, t), y);
  r = compose(r, commutator(y, t));
  r = compose(r, conjugate(commutator(x, z), yt));
  r = compose(r, conjugate(commutator(y, z), t));
  return r;
}

bool identity1_holds(const Permutation& x, const Permutation& y, const Permutation& z,
                     const Permutation& t) {
  return commutator(compose(x, y), compose(z, t)) == identity1_rhs(x, y, z, t);
}

std::vector<int> flatten_witness(std::initializer_list<const Permutation*> ps) {
  std::vector<int> w;
  for (const Permutation* p : ps) {
    const auto& im = p->images();
    w.insert(w.end(), im.begin(), im.end());
  }
  return w;
}

}  // namespace

CheckReport check_identity1(const PermutationGroup& G, const ScanPolicy& policy) {
  const std::string name = "identity1";
  std::uint64_t n = G.order();
  // Each quadruple costs around degree() elementary steps, so the budget is
  // spent on n^4 * degree rather than bare tuple counts.
  const std::uint64_t per_tuple = static_cast<std::uint64_t>(G.degree());
  bool exhaustive =
      n <= 100000 && n * n <= (policy.exhaustive_budget / per_tuple) / (n * n);
  if (exhaustive) {
    const auto& elems = G.elements();
    std::uint64_t count = 0;
    for (const auto& x : elems) {
      for (const auto& y : elems) {
        for (const auto& z : elems) {
          for (const auto& t : elems) {
            ++count;
            if (!identity1_holds(x, y, z, t)) {
              return CheckReport::fail(name, CheckReport::Exhaustive, count,
                                       flatten_witness({&x, &y, &z, &t}))
                  .with_detail("witness is the concatenated image lists of x,y,z,t");
            }
          }
        }
      }
    }
    return CheckReport::pass(name, CheckReport::Exhaustive, count);
  }

  std::mt19937_64 rng(policy.seed);
  std::uint64_t count = 0;
  if (n <= kDefaultEnumLimit) {
    const auto& elems = G.elements();
    auto draw = [&]() -> const Permutation& { return elems[rng() % elems.size()]; };
    for (std::uint64_t s = 0; s < policy.samples; ++s) {
      ++count;
      const Permutation& x = draw();
      const Permutation& y = draw();
      const Permutation& z = draw();
      const Permutation& t = draw();
      if (!identity1_holds(x, y, z, t)) {
        return CheckReport::fail(name, CheckReport::Sampled, count,
                                 flatten_witness({&x, &y, &z, &t}))
            .with_seed(policy.seed)
            .with_detail("witness is the concatenated image lists of x,y,z,t");
      }
    }
  } else {
    // Too big to enumerate: draw pseudo-random elements as generator words.
    const auto& gens = G.generators();
    auto draw = [&]() {
      Permutation p(G.degree());
      for (int i = 0; i < 32; ++i) p = compose(p, gens[rng() % gens.size()]);
      return p;
    };
    for (std::uint64_t s = 0; s < policy.samples; ++s) {
      ++count;
      Permutation x = draw(), y = draw(), z = draw(), t = draw();
      if (!identity1_holds(x, y, z, t)) {
        return CheckReport::fail(name, CheckReport::Sampled, count,
                                 flatten_witness({&x, &y, &z, &t}))
            .with_seed(policy.seed)
            .with_detail("witness is the concatenated image lists of x,y,z,t");
      }
    }
  }
  return CheckReport::pass(name, CheckReport::Sampled, count).with_seed(policy.seed);
}

// ---------------------------------------------------------------------------
// Centers and central series

PermutationGroup centralizer_in(const PermutationGroup& G, const std::vector<Permutation>& S,
                                std::uint64_t enum_limit) {
  const auto& elems = G.elements(enum_limit);
  std::vector<Permutation> picked;
  for (const auto& g : elems) {
    bool ok = true;
    for (const auto& s : S) ok = ok && commute(g, s);
    if (ok) picked.push_back(g);
  }
  return PermutationGroup(G.degree(), std::move(picked));
}

PermutationGroup center(const PermutationGroup& G, std::uint64_t enum_limit) {
  // Commuting with every generator is commuting with the whole group.
  return centralizer_in(G, G.generators(), enum_limit);
}

GroupSeries upper_central_series_group(const PermutationGroup& G, std::uint64_t enum_limit) {
  const auto& elems = G.elements(enum_limit);
  const auto& gens = G.generators();
  std::unordered_map<Permutation, int, PermHash> index;
  for (size_t i = 0; i < elems.size(); ++i) index.emplace(elems[i], static_cast<int>(i));

  GroupSeries series;
  std::vector<char> in_z(elems.size(), 0);
  Permutation id(G.degree());
  in_z[index.at(id)] = 1;
  series.chain.push_back({id});

  while (true) {
    // Membership in the next term only needs commutators against generators,
    // because the current term is normal in G.
    std::vector<char> next(elems.size(), 0);
    std::vector<Permutation> layer;
    for (size_t i = 0; i < elems.size(); ++i) {
      bool ok = true;
      for (const auto& g : gens) {
        if (!in_z[index.at(commutator(elems[i], g))]) {
          ok = false;
          break;
        }
      }
      if (ok) {
        next[i] = 1;
        layer.push_back(elems[i]);
      }
    }
    if (layer.size() == series.chain.back().size()) break;  // stalled: not nilpotent
    series.chain.push_back(std::move(layer));
    in_z = std::move(next);
    if (series.chain.back().size() == elems.size()) {
      series.terminated = true;
      series.nilpotency_class = static_cast<int>(series.chain.size()) - 1;
      break;
    }
  }
  if (elems.size() == 1) {
    series.terminated = true;
    series.nilpotency_class = 0;
  }
  return series;
}

std::optional<int> nilpotency_class_group(const PermutationGroup& G, std::uint64_t enum_limit) {
  return upper_central_series_group(G, enum_limit).nilpotency_class;
}

bool is_p_group(const PermutationGroup& G, int p) {
  if (p < 2) throw InputError("p must be at least 2");
  std::uint64_t n = G.order();
  while (n % p == 0) n /= p;
  return n == 1;
}

CheckReport quotient_is_p_group_check(const PermutationGroup& G, const PermutationGroup& Z,
                                      int p, std::uint64_t enum_limit) {
  const std::string name = "quotient-p-group";
  if (p < 2) throw InputError("p must be at least 2");
  const auto& elems = G.elements(enum_limit);
  // Enough iterations to reach any p-power order below the group order.
  int max_steps = 1;
  for (std::uint64_t n = G.order(); n > 1; n /= p) ++max_steps;
  std::uint64_t count = 0;
  for (const auto& g : elems) {
    ++count;
    Permutation h = g;
    bool landed = false;
    for (int step = 0; step <= max_steps && !landed; ++step) {
      if (Z.member(h)) {
        landed = true;
        break;
      }
      Permutation hp(h.degree());
      for (int k = 0; k < p; ++k) hp = compose(hp, h);
      h = std::move(hp);
    }
    if (!landed) {
      return CheckReport::fail(name, CheckReport::Exhaustive, count, g.images())
          .with_detail("no p-power of the witness lies in the given subgroup");
    }
  }
  return CheckReport::pass(name, CheckReport::Exhaustive, count);
}

}  // namespace moufang
