#include "moufang/loop.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "moufang/errors.hpp"

namespace moufang {

FiniteLoop::FiniteLoop(const std::vector<std::vector<int>>& rows) {
  const int n = static_cast<int>(rows.size());
  if (n == 0) throw FormatError("empty table");
  if (n > kMaxLoopOrder)
    throw SizeOverflow("loop order " + std::to_string(n) + " exceeds " +
                       std::to_string(kMaxLoopOrder));
  n_ = n;
  table_.resize(static_cast<size_t>(n) * n);
  for (int r = 0; r < n; ++r) {
    if (static_cast<int>(rows[r].size()) != n)
      throw FormatError("row " + std::to_string(r) + " has " +
                        std::to_string(rows[r].size()) + " entries, expected " +
                        std::to_string(n));
    for (int c = 0; c < n; ++c) {
      const int v = rows[r][c];
      if (v < 0 || v >= n)
        throw NotLatinSquare("entry " + std::to_string(v) + " at (" + std::to_string(r) +
                             "," + std::to_string(c) + ") out of range");
      table_[r * n + c] = v;
    }
  }

  std::vector<char> seen(n);
  for (int r = 0; r < n; ++r) {
    std::fill(seen.begin(), seen.end(), 0);
    for (int c = 0; c < n; ++c) {
      const int v = table_[r * n + c];
      if (seen[v]) throw NotLatinSquare(true, r, v);
      seen[v] = 1;
    }
  }
  for (int c = 0; c < n; ++c) {
    std::fill(seen.begin(), seen.end(), 0);
    for (int r = 0; r < n; ++r) {
      const int v = table_[r * n + c];
      if (seen[v]) throw NotLatinSquare(false, c, v);
      seen[v] = 1;
    }
  }

  e_ = -1;
  for (int cand = 0; cand < n; ++cand) {
    bool ok = true;
    for (int x = 0; x < n && ok; ++x)
      ok = table_[cand * n + x] == x && table_[x * n + cand] == x;
    if (ok) {
      e_ = cand;
      break;
    }
  }
  if (e_ < 0) throw NoIdentity();

  // Rows are permutations, so a \ b is a table lookup after inverting rows.
  ldiv_.resize(static_cast<size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int x = 0; x < n; ++x) ldiv_[a * n + table_[a * n + x]] = x;

  inv_.resize(n);
  for (int a = 0; a < n; ++a) inv_[a] = ldiv_[a * n + e_];
}

FiniteLoop::FiniteLoop(const FiniteLoop& o)
    : n_(o.n_),
      e_(o.e_),
      table_(o.table_),
      ldiv_(o.ldiv_),
      inv_(o.inv_),
      cml_state_(o.cml_state_.load()) {}

FiniteLoop& FiniteLoop::operator=(const FiniteLoop& o) {
  if (this != &o) {
    n_ = o.n_;
    e_ = o.e_;
    table_ = o.table_;
    ldiv_ = o.ldiv_;
    inv_ = o.inv_;
    cml_state_.store(o.cml_state_.load());
  }
  return *this;
}

FiniteLoop::FiniteLoop(FiniteLoop&& o) noexcept
    : n_(o.n_),
      e_(o.e_),
      table_(std::move(o.table_)),
      ldiv_(std::move(o.ldiv_)),
      inv_(std::move(o.inv_)),
      cml_state_(o.cml_state_.load()) {}

FiniteLoop& FiniteLoop::operator=(FiniteLoop&& o) noexcept {
  if (this != &o) {
    n_ = o.n_;
    e_ = o.e_;
    table_ = std::move(o.table_);
    ldiv_ = std::move(o.ldiv_);
    inv_ = std::move(o.inv_);
    cml_state_.store(o.cml_state_.load());
  }
  return *this;
}

int FiniteLoop::element_order(int a) const {
  int k = 1;
  int p = a;
  while (p != e_) {
    p = mul(a, p);
    ++k;
  }
  return k;
}

std::uint64_t FiniteLoop::exponent() const {
  std::uint64_t acc = 1;
  for (int a = 0; a < n_; ++a) {
    const std::uint64_t k = static_cast<std::uint64_t>(element_order(a));
    const std::uint64_t g = std::gcd(acc, k);
    std::uint64_t out;
    if (__builtin_mul_overflow(acc / g, k, &out)) throw TooLarge("exponent overflows");
    acc = out;
  }
  return acc;
}

bool FiniteLoop::cml() const {
  int s = cml_state_.load();
  if (s < 0) {
    s = is_cml(*this).passed() ? 1 : 0;
    cml_state_.store(s);
  }
  return s == 1;
}

CheckReport is_commutative(const FiniteLoop& L) {
  const int n = L.order();
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (L.mul(a, b) != L.mul(b, a))
        return CheckReport::fail("commutative", CheckReport::Mode::Exhaustive,
                                 static_cast<std::uint64_t>(n) * n, {a, b});
  return CheckReport::pass("commutative", CheckReport::Mode::Exhaustive,
                           static_cast<std::uint64_t>(n) * n);
}

CheckReport is_associative(const FiniteLoop& L) {
  const int n = L.order();
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (L.mul(L.mul(a, b), c) != L.mul(a, L.mul(b, c)))
          return CheckReport::fail("associative", CheckReport::Mode::Exhaustive,
                                   static_cast<std::uint64_t>(n) * n * n, {a, b, c});
  return CheckReport::pass("associative", CheckReport::Mode::Exhaustive,
                           static_cast<std::uint64_t>(n) * n * n);
}

CheckReport check_moufang_identity(const FiniteLoop& L) {
  const int m = L.order();
  const std::uint64_t cases = static_cast<std::uint64_t>(m) * m * m;
  for (int x = 0; x < m; ++x) {
    const int xx = L.mul(x, x);
    for (int y = 0; y < m; ++y) {
      const int xy = L.mul(x, y);
      for (int z = 0; z < m; ++z)
        if (L.mul(xx, L.mul(y, z)) != L.mul(xy, L.mul(x, z)))
          return CheckReport::fail("moufang-identity", CheckReport::Mode::Exhaustive, cases,
                                   {x, y, z});
    }
  }
  return CheckReport::pass("moufang-identity", CheckReport::Mode::Exhaustive, cases);
}

CheckReport is_cml(const FiniteLoop& L) {
  const std::uint64_t n = L.order();
  const std::uint64_t cases = n * n + n * n * n;
  CheckReport comm = is_commutative(L);
  if (comm.failed()) {
    return CheckReport::fail("cml", CheckReport::Mode::Exhaustive, cases,
                             *comm.counterexample)
        .with_detail("commutativity fails");
  }
  CheckReport mouf = check_moufang_identity(L);
  if (mouf.failed()) {
    return CheckReport::fail("cml", CheckReport::Mode::Exhaustive, cases, *mouf.counterexample)
        .with_detail("Moufang identity x^2*yz = xy*xz fails");
  }
  return CheckReport::pass("cml", CheckReport::Mode::Exhaustive, cases);
}

namespace {

// Left-normed product of the four associator factors of identity (2).
int identity2_rhs(const FiniteLoop& L, int x, int y, int u, int v) {
  const int p = L.associator(x, u, v);
  const int q = L.associator(p, x, y);
  const int r = L.associator(y, u, v);
  const int s = L.associator(r, y, x);
  return L.mul(L.mul(L.mul(p, q), r), s);
}

}  // namespace

CheckReport check_identity2(const FiniteLoop& L, const ScanPolicy& policy) {
  if (!L.cml()) return CheckReport::skipped("identity2", "input is not a CML");
  const int n = L.order();
  const std::uint64_t total = static_cast<std::uint64_t>(n) * n * n * n;
  if (total <= policy.exhaustive_budget) {
    // Associators cached: the scan then costs a handful of lookups per case.
    std::vector<int> assoc(static_cast<size_t>(n) * n * n);
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c)
          assoc[(static_cast<size_t>(a) * n + b) * n + c] = L.associator(a, b, c);
    auto at = [&](int a, int b, int c) {
      return assoc[(static_cast<size_t>(a) * n + b) * n + c];
    };
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y) {
        const int xy = L.mul(x, y);
        for (int u = 0; u < n; ++u)
          for (int v = 0; v < n; ++v) {
            const int p = at(x, u, v);
            const int r = at(y, u, v);
            const int rhs = L.mul(L.mul(L.mul(p, at(p, x, y)), r), at(r, y, x));
            if (at(xy, u, v) != rhs)
              return CheckReport::fail("identity2", CheckReport::Mode::Exhaustive, total,
                                       {x, y, u, v});
          }
      }
    return CheckReport::pass("identity2", CheckReport::Mode::Exhaustive, total);
  }
  std::mt19937_64 rng(policy.seed);
  auto draw = [&] { return static_cast<int>(rng() % static_cast<std::uint64_t>(n)); };
  for (std::uint64_t i = 0; i < policy.samples; ++i) {
    const int x = draw(), y = draw(), u = draw(), v = draw();
    if (L.associator(L.mul(x, y), u, v) != identity2_rhs(L, x, y, u, v))
      return CheckReport::fail("identity2", CheckReport::Mode::Sampled, policy.samples,
                               {x, y, u, v})
          .with_seed(policy.seed);
  }
  return CheckReport::pass("identity2", CheckReport::Mode::Sampled, policy.samples)
      .with_seed(policy.seed);
}

CheckReport check_identity3(const FiniteLoop& L) {
  if (!L.cml()) return CheckReport::skipped("identity3", "input is not a CML");
  const int n = L.order();
  const std::uint64_t total = static_cast<std::uint64_t>(n) * n * n;
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z) {
        const int a = L.associator(x, y, z);
        if (a != L.associator(L.inverse(y), x, z) ||
            a != L.inverse(L.associator(y, x, z)) || a != L.associator(y, z, x))
          return CheckReport::fail("identity3", CheckReport::Mode::Exhaustive, total,
                                   {x, y, z});
      }
  return CheckReport::pass("identity3", CheckReport::Mode::Exhaustive, total);
}

bool Subloop::contains(int x) const {
  return std::binary_search(members.begin(), members.end(), x);
}

Subloop generate(const FiniteLoop& L, const std::vector<int>& gens) {
  const int n = L.order();
  std::vector<char> in(n, 0);
  std::vector<int> work;
  auto push = [&](int x) {
    if (!in[x]) {
      in[x] = 1;
      work.push_back(x);
    }
  };
  push(L.identity());
  for (int g : gens) {
    if (g < 0 || g >= n) throw InputError("element " + std::to_string(g) + " out of range");
    push(g);
  }
  // Worklist closure: every new element is combined with everything seen.
  for (size_t i = 0; i < work.size(); ++i) {
    const int a = work[i];
    for (size_t j = 0; j <= i; ++j) {
      const int b = work[j];
      push(L.mul(a, b));
      push(L.mul(b, a));
      push(L.left_div(a, b));
      push(L.left_div(b, a));
    }
  }
  std::sort(work.begin(), work.end());
  return Subloop{&L, std::move(work)};
}

Subloop make_subloop(const FiniteLoop& L, std::vector<int> members) {
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  Subloop H{&L, std::move(members)};
  for (int x : H.members)
    if (x < 0 || x >= L.order())
      throw InputError("element " + std::to_string(x) + " out of range");
  if (!H.contains(L.identity())) throw InputError("subloop must contain the identity");
  for (int a : H.members)
    for (int b : H.members) {
      if (!H.contains(L.mul(a, b)))
        throw InputError("set not closed under multiplication: " + std::to_string(a) +
                         "*" + std::to_string(b));
      if (!H.contains(L.left_div(a, b)))
        throw InputError("set not closed under left division: " + std::to_string(a) +
                         "\\" + std::to_string(b));
    }
  return H;
}

Subloop make_subloop_all(const FiniteLoop& L) {
  std::vector<int> members(L.order());
  for (int i = 0; i < L.order(); ++i) members[i] = i;
  return Subloop{&L, std::move(members)};
}

bool is_morphism(const FiniteLoop& src, const FiniteLoop& dst, const LoopMorphism& f) {
  const int n = src.order();
  if (static_cast<int>(f.map.size()) != n)
    throw InputError("morphism map has " + std::to_string(f.map.size()) +
                     " entries, expected " + std::to_string(n));
  for (int v : f.map)
    if (v < 0 || v >= dst.order())
      throw InputError("morphism image " + std::to_string(v) + " out of range");
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (f.map[src.mul(a, b)] != dst.mul(f.map[a], f.map[b])) return false;
  return true;
}

QuotientResult quotient(const FiniteLoop& L, const Subloop& H) {
  const int n = L.order();
  if (H.parent != &L) throw InputError("subloop does not belong to this loop");
  std::vector<int> coset(n, -1);
  std::vector<int> reps;
  for (int x = 0; x < n; ++x) {
    if (coset[x] >= 0) continue;
    const int id = static_cast<int>(reps.size());
    reps.push_back(x);
    for (int h : H.members) {
      const int y = L.mul(x, h);
      if (coset[y] >= 0)
        throw NotNormal("cosets overlap at element " + std::to_string(y));
      coset[y] = id;
    }
  }
  const int m = static_cast<int>(reps.size());
  std::vector<std::vector<int>> rows(m, std::vector<int>(m));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) rows[i][j] = coset[L.mul(reps[i], reps[j])];
  // Well-definedness: the product of cosets must not depend on representatives.
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (coset[L.mul(x, y)] != rows[coset[x]][coset[y]])
        throw NotNormal("coset product ill-defined at (" + std::to_string(x) + "," +
                        std::to_string(y) + ")");
  return QuotientResult{FiniteLoop(rows), LoopMorphism{std::move(coset)}};
}

FiniteLoop direct_product(const FiniteLoop& a, const FiniteLoop& b, int max_order) {
  const long long n = static_cast<long long>(a.order()) * b.order();
  if (n > max_order)
    throw SizeOverflow("product order " + std::to_string(n) + " exceeds " +
                       std::to_string(max_order));
  const int na = a.order(), nb = b.order(), m = static_cast<int>(n);
  std::vector<std::vector<int>> rows(m, std::vector<int>(m));
  for (int i = 0; i < na; ++i)
    for (int j = 0; j < nb; ++j)
      for (int k = 0; k < na; ++k)
        for (int l = 0; l < nb; ++l)
          rows[i * nb + j][k * nb + l] = a.mul(i, k) * nb + b.mul(j, l);
  return FiniteLoop(rows);
}

SubloopTable as_loop(const Subloop& H) {
  const FiniteLoop& L = *H.parent;
  const int m = H.order();
  std::vector<int> pos(L.order(), -1);
  for (int i = 0; i < m; ++i) pos[H.members[i]] = i;
  std::vector<std::vector<int>> rows(m, std::vector<int>(m));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      const int p = pos[L.mul(H.members[i], H.members[j])];
      if (p < 0) throw InputError("member set is not closed");
      rows[i][j] = p;
    }
  return SubloopTable{FiniteLoop(rows), H.members};
}

}  // namespace moufang
