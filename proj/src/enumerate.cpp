#include <algorithm>
#include <functional>

#include "crossnum/crossing.hpp"

namespace crossnum {

namespace {

long long binomial_capped(long long n, int k, long long cap) {
  long long r = 1;
  for (int i = 0; i < k; ++i) {
    r = r * (n - i) / (i + 1);
    if (r > cap)
      return cap + 1;
  }
  return r;
}

} // namespace

std::vector<Realization>
enumerate_realizable(const Graph &g, int k,
                     const CrossingConstraints &constraints,
                     long long ceiling) {
  if (k < 0)
    throw InvalidInput("k must be non-negative");
  std::vector<CrossingPair> pool;
  const auto &edges = g.edges();
  for (std::size_t i = 0; i < edges.size(); ++i)
    for (std::size_t j = i + 1; j < edges.size(); ++j)
      if (!edges[i].shares_endpoint(edges[j]))
        pool.emplace_back(edges[i], edges[j]);

  long long raw = 0;
  for (int size = 0; size <= k; ++size) {
    raw += binomial_capped(static_cast<long long>(pool.size()), size, ceiling);
    if (raw > ceiling)
      throw SearchTooLarge("enumeration would visit more than " +
                           std::to_string(ceiling) + " crossing sets");
  }

  std::vector<Realization> out;
  std::vector<int> pick;
  const HostId host = HostId::of(g);

  auto emit_orders = [&](const std::vector<CrossingPair> &pairs) {
    DrawingCertificate c;
    c.host = host;
    std::map<Edge, std::vector<int>> on_edge;
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      c.crossings.push_back({static_cast<int>(i), pairs[i]});
      on_edge[pairs[i].e1].push_back(static_cast<int>(i));
      on_edge[pairs[i].e2].push_back(static_cast<int>(i));
    }
    std::vector<std::pair<Edge, std::vector<int>>> multi;
    for (auto &[e, ids] : on_edge)
      if (ids.size() >= 2)
        multi.emplace_back(e, ids); // ids ascending: first permutation
    // Odometer over the permutations of every multiply-crossed edge.
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
      if (i == multi.size()) {
        c.orders.clear();
        for (const auto &[e, ids] : multi)
          c.orders[e] = ids;
        const Graph p = planarize(g, c);
        if (is_planar(p))
          out.push_back({c, planar_embedding(p)});
        return;
      }
      auto &ids = multi[i].second;
      std::sort(ids.begin(), ids.end());
      do {
        rec(i + 1);
      } while (std::next_permutation(ids.begin(), ids.end()));
    };
    rec(0);
  };

  for (int size = 0; size <= k; ++size) {
    pick.resize(size);
    std::function<void(int, int)> choose = [&](int slot, int from) {
      if (slot == size) {
        std::vector<CrossingPair> pairs;
        pairs.reserve(size);
        for (int idx : pick)
          pairs.push_back(pool[idx]);
        if (constraints.allows(pairs))
          emit_orders(pairs);
        return;
      }
      for (int i = from; i < static_cast<int>(pool.size()); ++i) {
        pick[slot] = i;
        choose(slot + 1, i + 1);
      }
    };
    choose(0, 0);
  }
  return out;
}

} // namespace crossnum
