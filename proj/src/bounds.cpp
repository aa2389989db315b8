#include "crossnum/bounds.hpp"

#include <algorithm>
#include <sstream>

namespace crossnum {

std::string BoundReport::trace() const {
  std::string out;
  for (const std::string &line : derivation)
    out += line + '\n';
  return out;
}

EulerCountInput g12_euler_preset() {
  return EulerCountInput{12, 18, 3, 4, 6};
}

namespace {

long long ceil_div(long long a, long long b) {
  if (a <= 0)
    return 0;
  return (a + b - 1) / b;
}

} // namespace

BoundReport euler_skewness_bound(const EulerCountInput &in) {
  if (in.n < 3 || in.short_face < 3 || in.long_face <= in.short_face ||
      in.m_edges < 0 || in.short_cycle_budget < 0)
    throw InvalidInput("euler bound requires n >= 3 and 3 <= s < g");

  const long long n = in.n, M = in.m_edges, B = in.short_cycle_budget;
  const long long s = in.short_face, g = in.long_face;
  const long long p0 = 2 - n + M; // faces with no deletion

  BoundReport r;
  std::ostringstream line;
  line << "euler: " << n << " - (" << M << " - m) + p = 2  =>  p = " << p0
       << " - m";
  r.derivation.push_back(line.str());

  if (p0 <= 0) {
    r.warning = true;
    r.derivation.push_back(
        "warning: p <= 0 with no deletions; inputs cannot describe a "
        "connected nonplanar graph, bound is 0");
    return r;
  }

  auto lhs = [&](long long p) {
    if (p <= 0)
      return 0LL;
    const long long shorts = std::min(B, p);
    return s * shorts + g * (p - shorts);
  };
  long long k = 0;
  while (lhs(p0 - k) > 2 * (M - k))
    ++k;
  r.deletions_lower_bound = static_cast<int>(k);
  r.face_count_at_bound = static_cast<int>(p0 - k);

  std::ostringstream faces, lin;
  if (p0 - k >= B) {
    // Short-face budget saturated: B faces of length s, the rest >= g.
    faces << "faces: " << B << "*" << s << " + (" << p0 << " - m - " << B
          << ")*" << g << " <= 2*(" << M << " - m)";
    const long long rhs = s * B + g * (p0 - B) - 2 * M;
    lin << "=> " << (g - 2) << "m >= " << rhs;
    r.derivation.push_back(faces.str());
    r.derivation.push_back(lin.str());
    r.derivation.push_back("=> m >= " + std::to_string(ceil_div(rhs, g - 2)));
  } else {
    faces << "faces: " << s << "*(" << p0 << " - m) <= 2*(" << M << " - m)";
    const long long rhs = s * p0 - 2 * M;
    lin << "=> " << (s - 2) << "m >= " << rhs;
    r.derivation.push_back(faces.str());
    r.derivation.push_back(lin.str());
    r.derivation.push_back("=> m >= " + std::to_string(ceil_div(rhs, s - 2)));
  }
  r.derivation.push_back("least feasible m = " + std::to_string(k) +
                         ", faces p = " + std::to_string(p0 - k));
  return r;
}

namespace {

// Face-counting bound for one connected component with n vertices, m edges,
// girth g0 and cycle counts by length.
int component_census_bound(int n, int m, int g0,
                           const std::vector<long long> &counts,
                           int cap_length) {
  if (m <= n)
    return 0;
  const int cyclomatic_fallback = m - n; // H with at most one cycle
  auto min_face_sum = [&](long long p) {
    long long sum = 0;
    for (int len = g0; len < cap_length && p > 0; ++len) {
      const long long take =
          std::min<long long>(p, len < static_cast<int>(counts.size())
                                     ? counts[len]
                                     : 0);
      sum += take * len;
      p -= take;
    }
    if (p > 0)
      sum += p * cap_length;
    return sum;
  };
  for (int k = 0; k < cyclomatic_fallback; ++k) {
    const long long mh = m - k;
    const long long p = 2 - n + mh;
    if (min_face_sum(p) <= 2 * mh)
      return k;
  }
  return cyclomatic_fallback;
}

} // namespace

int cycle_census_bound(const Graph &g, int max_extra) {
  std::vector<int> comp;
  const int ncomp = connected_components(g, comp);
  int total = 0;
  for (int c = 0; c < ncomp; ++c) {
    std::set<Vertex> others;
    for (Vertex v = 0; v < g.vertex_count(); ++v)
      if (comp[v] != c)
        others.insert(v);
    const Graph part = ncomp == 1 ? g : induced_subgraph(g, others);
    const int n = part.vertex_count();
    const int m = part.edge_count();
    if (m <= n)
      continue;
    const int g0 = girth(part);
    // Faces shorter than 2*g0 carry exactly one cycle on their boundary.
    const int cap = std::min(2 * g0, g0 + std::max(1, max_extra));
    const auto counts = count_cycles_up_to(part, cap - 1);
    total += component_census_bound(n, m, g0, counts, cap);
  }
  return total;
}

std::vector<KuratowskiWitness> kuratowski_packing_witnesses(const Graph &g) {
  std::vector<KuratowskiWitness> out;
  Graph h = g;
  while (!is_planar(h)) {
    KuratowskiWitness w = kuratowski_witness(h);
    for (const Edge &e : w.edges)
      h.remove_edge(e.u, e.v);
    out.push_back(std::move(w));
  }
  return out;
}

int kuratowski_packing(const Graph &g) {
  return static_cast<int>(kuratowski_packing_witnesses(g).size());
}

namespace {

class SkewnessSearch {
public:
  SkewnessSearch(const Graph &g, const SkewnessOptions &opt,
                 const Deadline &deadline)
      : g_(g), opt_(opt), poll_(deadline, 8),
        deleted_(g.edge_count(), 0), kept_(g.edge_count(), 0) {}

  // True if some deletion set of size <= budget extends the current one.
  bool search(int budget) {
    if (poll_.expired())
      return false;
    const Graph h = current();
    if (is_planar(h))
      return true;
    if (budget == 0)
      return false;
    if (opt_.census_prune && cycle_census_bound(h) > budget)
      return false;
    if (opt_.packing_prune && budget <= 2 && kuratowski_packing(h) > budget)
      return false;

    const KuratowskiWitness w = kuratowski_witness(h);
    std::vector<int> newly_kept;
    bool found = false;
    for (const Edge &e : w.edges) {
      const int idx = g_.edge_index(e);
      if (kept_[idx])
        continue;
      deleted_[idx] = 1;
      path_.push_back(e);
      found = search(budget - 1);
      if (found)
        break;
      path_.pop_back();
      deleted_[idx] = 0;
      kept_[idx] = 1;
      newly_kept.push_back(idx);
      if (poll_.hit())
        break;
    }
    for (int idx : newly_kept)
      kept_[idx] = 0;
    return found;
  }

  bool timed_out() const { return poll_.hit(); }
  const std::vector<Edge> &path() const { return path_; }

private:
  Graph current() const {
    std::vector<Edge> kept;
    for (int i = 0; i < g_.edge_count(); ++i)
      if (!deleted_[i])
        kept.push_back(g_.edges()[i]);
    return Graph(g_.vertex_count(), kept);
  }

  const Graph &g_;
  const SkewnessOptions &opt_;
  DeadlinePoller poll_;
  std::vector<char> deleted_;
  std::vector<char> kept_;
  std::vector<Edge> path_;
};

} // namespace

SkewnessResult skewness_exact(const Graph &g, int max_k, Seconds budget,
                              const SkewnessOptions &options) {
  if (max_k < 0)
    throw InvalidInput("max_k must be non-negative");
  const Deadline deadline = Deadline::after(budget);
  SkewnessResult result;
  int start = 0;
  if (options.census_prune)
    start = cycle_census_bound(g);
  for (int k = start; k <= max_k; ++k) {
    SkewnessSearch s(g, options, deadline);
    if (s.search(k)) {
      result.status = SkewnessResult::Status::Exact;
      result.value = static_cast<int>(s.path().size());
      result.deletion_set = s.path();
      std::sort(result.deletion_set.begin(), result.deletion_set.end());
      return result;
    }
    if (s.timed_out()) {
      result.status = SkewnessResult::Status::Timeout;
      result.value = k;
      return result;
    }
  }
  result.status = SkewnessResult::Status::AboveMax;
  result.value = std::max(start, max_k + 1);
  return result;
}

} // namespace crossnum
