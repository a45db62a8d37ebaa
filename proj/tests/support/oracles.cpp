#include "oracles.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

namespace oracle {

namespace {

std::vector<std::uint64_t> adjacency(int n, const Edges& edges) {
  std::vector<std::uint64_t> adj(static_cast<std::size_t>(n), 0);
  for (const auto& [u, v] : edges) {
    adj[u] |= std::uint64_t{1} << v;
    adj[v] |= std::uint64_t{1} << u;
  }
  return adj;
}

void count(std::uint64_t alive, int size, const std::vector<std::uint64_t>& adj, std::vector<mpz_class>& out) {
  if (alive == 0) {
    if (out.size() <= static_cast<std::size_t>(size)) out.resize(size + 1);
    out[size] += 1;
    return;
  }
  const int v = __builtin_ctzll(alive);
  const std::uint64_t without = alive & ~(std::uint64_t{1} << v);
  count(without, size, adj, out);
  count(without & ~adj[v], size + 1, adj, out);
}

}  // namespace

std::vector<mpz_class> independence_counts(int n, const Edges& edges) {
  std::vector<mpz_class> out;
  const std::uint64_t all = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
  count(all, 0, adjacency(n, edges), out);
  return out;
}

int independence_number(int n, const Edges& edges) {
  const auto adj = adjacency(n, edges);
  int best = 0;
  std::function<void(std::uint64_t, int)> go = [&](std::uint64_t alive, int size) {
    if (size + __builtin_popcountll(alive) <= best) return;
    if (alive == 0) {
      best = std::max(best, size);
      return;
    }
    const int v = __builtin_ctzll(alive);
    go(alive & ~(std::uint64_t{1} << v) & ~adj[v], size + 1);
    go(alive & ~(std::uint64_t{1} << v), size);
  };
  go(n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1, 0);
  return best;
}

bool unimodal(const std::vector<mpz_class>& a) {
  // Some m with a_0 <= ... <= a_m >= ... >= a_n.
  for (std::size_t m = 0; m < a.size(); ++m) {
    bool ok = true;
    for (std::size_t i = 0; i < m && ok; ++i) ok = a[i] <= a[i + 1];
    for (std::size_t i = m; i + 1 < a.size() && ok; ++i) ok = a[i] >= a[i + 1];
    if (ok) return true;
  }
  return false;
}

bool log_concave_positive(const std::vector<mpz_class>& a) {
  for (const auto& x : a) {
    if (x <= 0) return false;
  }
  for (std::size_t k = 1; k + 1 < a.size(); ++k) {
    if (a[k] * a[k] < a[k - 1] * a[k + 1]) return false;
  }
  return true;
}

std::string tree_code(int n, const Edges& edges) {
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(n));
  for (const auto& [u, v] : edges) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  // Centres by repeatedly stripping leaves.
  std::vector<int> deg(static_cast<std::size_t>(n));
  std::vector<int> layer;
  for (int v = 0; v < n; ++v) {
    deg[v] = static_cast<int>(adj[v].size());
    if (deg[v] <= 1) layer.push_back(v);
  }
  int remaining = n;
  while (remaining > 2) {
    remaining -= static_cast<int>(layer.size());
    std::vector<int> next;
    for (int v : layer) {
      for (int u : adj[v]) {
        if (--deg[u] == 1) next.push_back(u);
      }
    }
    layer = next;
  }
  std::function<std::string(int, int)> enc = [&](int v, int parent) {
    std::vector<std::string> kids;
    for (int u : adj[v]) {
      if (u != parent) kids.push_back(enc(u, v));
    }
    std::sort(kids.begin(), kids.end());
    std::string s = "(";
    for (const auto& k : kids) s += k;
    return s + ")";
  };
  std::string best;
  for (int c : layer) {
    const std::string s = enc(c, -1);
    if (best.empty() || s < best) best = s;
  }
  return best;
}

std::size_t count_unlabeled_trees_otter(int n) {
  if (n <= 1) return 1;
  // r[k] = rooted unlabeled trees on k vertices.
  std::vector<mpz_class> r(static_cast<std::size_t>(n + 1), 0);
  r[1] = 1;
  for (int m = 1; m < n; ++m) {
    mpz_class sum = 0;
    for (int k = 1; k <= m; ++k) {
      mpz_class inner = 0;
      for (int d = 1; d <= k; ++d) {
        if (k % d == 0) inner += d * r[d];
      }
      sum += inner * r[m - k + 1];
    }
    r[m + 1] = sum / m;
  }
  mpz_class pairs = 0;
  for (int i = 1; i < n; ++i) pairs += r[i] * r[n - i];
  if (n % 2 == 0) pairs -= r[n / 2];
  const mpz_class t = r[n] - pairs / 2;
  return t.get_ui();
}

std::size_t count_unlabeled_trees(int n) {
  if (n <= 2) return 1;
  std::set<std::string> seen;
  std::vector<int> seq(static_cast<std::size_t>(n - 2), 0);
  for (;;) {
    std::vector<int> degree(static_cast<std::size_t>(n), 1);
    for (int x : seq) ++degree[x];
    Edges edges;
    for (int x : seq) {
      int leaf = 0;
      while (degree[leaf] != 1) ++leaf;
      edges.emplace_back(leaf, x);
      --degree[leaf];
      --degree[x];
    }
    int u = -1;
    for (int v = 0; v < n; ++v) {
      if (degree[v] == 1) {
        if (u < 0) {
          u = v;
        } else {
          edges.emplace_back(u, v);
        }
      }
    }
    seen.insert(tree_code(n, edges));
    std::size_t i = 0;
    while (i < seq.size() && ++seq[i] == n) seq[i++] = 0;
    if (i == seq.size()) break;
  }
  return seen.size();
}

std::vector<mpz_class> from_roots(const std::vector<long>& r) {
  std::vector<mpz_class> c{1};
  for (long x : r) {
    std::vector<mpz_class> next(c.size() + 1);
    for (std::size_t i = 0; i < c.size(); ++i) {
      next[i] += c[i];
      next[i + 1] += c[i] * x;
    }
    c = next;
  }
  return c;
}

mpq_class eval(const std::vector<mpz_class>& c, const mpq_class& x) {
  mpq_class acc = 0;
  for (std::size_t i = c.size(); i-- > 0;) acc = acc * x + c[i];
  return acc;
}

mpq_class grid_min(const std::vector<mpz_class>& c, long den, long lo_num, long hi_num) {
  mpq_class best = eval(c, mpq_class(lo_num, den));
  for (long k = lo_num; k <= hi_num; ++k) {
    mpq_class q(k, den);
    q.canonicalize();
    best = std::min(best, eval(c, q));
  }
  return best;
}

mpq_class frac(long a, long b) {
  mpq_class r(a, b);
  r.canonicalize();
  return r;
}

}  // namespace oracle
