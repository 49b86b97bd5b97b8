#include "hopfext/group_table.hpp"

#include <algorithm>
#include <set>

#include "json.hpp"

namespace hopfext {

GroupTable::GroupTable(std::uint32_t order_, std::vector<std::uint32_t> mul_)
    : order(order_), mul(std::move(mul_)) {
  if (mul.size() != static_cast<std::size_t>(order) * order)
    throw std::invalid_argument("multiplication table has wrong size");
  for (auto v : mul)
    if (v >= order) throw std::invalid_argument("table entry out of range");
}

bool GroupTable::is_group() const {
  for (std::uint32_t u = 0; u < order; ++u)
    if (at(0, u) != u || at(u, 0) != u) return false;
  for (std::uint32_t u = 0; u < order; ++u) {
    bool has_inverse = false;
    for (std::uint32_t v = 0; v < order && !has_inverse; ++v)
      has_inverse = (at(u, v) == 0 && at(v, u) == 0);
    if (!has_inverse) return false;
  }
  for (std::uint32_t u = 0; u < order; ++u)
    for (std::uint32_t v = 0; v < order; ++v)
      for (std::uint32_t w = 0; w < order; ++w)
        if (at(at(u, v), w) != at(u, at(v, w))) return false;
  return true;
}

bool GroupTable::is_abelian() const {
  for (std::uint32_t u = 0; u < order; ++u)
    for (std::uint32_t v = u + 1; v < order; ++v)
      if (at(u, v) != at(v, u)) return false;
  return true;
}

std::uint32_t GroupTable::inverse(std::uint32_t u) const {
  for (std::uint32_t v = 0; v < order; ++v)
    if (at(u, v) == 0) return v;
  throw std::logic_error("element has no inverse");
}

std::uint32_t GroupTable::power(std::uint32_t u, std::uint64_t e) const {
  std::uint32_t r = 0;
  while (e--) r = at(r, u);
  return r;
}

std::uint32_t GroupTable::element_order(std::uint32_t u) const {
  std::uint32_t x = u, k = 1;
  while (x != 0) {
    x = at(x, u);
    ++k;
  }
  return k;
}

std::uint32_t GroupTable::exponent() const {
  std::uint32_t e = 1;
  for (std::uint32_t u = 0; u < order; ++u) e = std::lcm(e, element_order(u));
  return e;
}

std::uint32_t GroupTable::commutator(std::uint32_t u, std::uint32_t v) const {
  return at(at(at(u, v), inverse(u)), inverse(v));
}

std::vector<std::uint32_t> GroupTable::element_orders() const {
  std::vector<std::uint32_t> r(order);
  for (std::uint32_t u = 0; u < order; ++u) r[u] = element_order(u);
  return r;
}

std::map<std::uint32_t, std::uint32_t> GroupTable::order_histogram() const {
  std::map<std::uint32_t, std::uint32_t> h;
  for (auto o : element_orders()) ++h[o];
  return h;
}

std::uint32_t GroupTable::centralizer_size(std::uint32_t u) const {
  std::uint32_t c = 0;
  for (std::uint32_t v = 0; v < order; ++v)
    if (at(u, v) == at(v, u)) ++c;
  return c;
}

std::uint32_t GroupTable::center_size() const {
  std::uint32_t c = 0;
  for (std::uint32_t u = 0; u < order; ++u)
    if (centralizer_size(u) == order) ++c;
  return c;
}

std::vector<std::uint32_t> GroupTable::closure(std::vector<std::uint32_t> gens) const {
  std::vector<bool> in(order, false);
  std::vector<std::uint32_t> elems{0};
  in[0] = true;
  std::vector<std::uint32_t> queue{0};
  for (auto g : gens)
    if (!in[g]) {
      in[g] = true;
      elems.push_back(g);
      queue.push_back(g);
    }
  while (!queue.empty()) {
    std::uint32_t u = queue.back();
    queue.pop_back();
    for (std::size_t i = 0; i < elems.size(); ++i) {
      for (std::uint32_t w : {at(u, elems[i]), at(elems[i], u)}) {
        if (!in[w]) {
          in[w] = true;
          elems.push_back(w);
          queue.push_back(w);
        }
      }
    }
  }
  std::sort(elems.begin(), elems.end());
  return elems;
}

std::vector<std::uint32_t> GroupTable::lower_central_sizes() const {
  std::vector<std::uint32_t> sizes{order};
  std::vector<std::uint32_t> current(order);
  for (std::uint32_t u = 0; u < order; ++u) current[u] = u;
  while (sizes.back() > 1) {
    std::vector<std::uint32_t> comms;
    for (auto u : current)
      for (std::uint32_t v = 0; v < order; ++v) comms.push_back(commutator(u, v));
    current = closure(comms);
    if (current.size() == sizes.back()) break;  // stabilized above 1
    sizes.push_back(static_cast<std::uint32_t>(current.size()));
  }
  return sizes;
}

std::vector<std::uint32_t> GroupTable::generating_set() const {
  std::vector<std::uint32_t> gens;
  std::vector<std::uint32_t> span{0};
  for (std::uint32_t u = 1; u < order && span.size() < order; ++u) {
    if (std::binary_search(span.begin(), span.end(), u)) continue;
    gens.push_back(u);
    span = closure(gens);
  }
  return gens;
}

GroupTable GroupTable::relabeled(const std::vector<std::uint32_t>& perm) const {
  if (perm.size() != order || perm[0] != 0)
    throw std::invalid_argument("relabeling must be a permutation fixing the identity");
  std::vector<std::uint32_t> m(mul.size());
  for (std::uint32_t u = 0; u < order; ++u)
    for (std::uint32_t v = 0; v < order; ++v)
      m[perm[u] * order + perm[v]] = perm[at(u, v)];
  return GroupTable(order, std::move(m));
}

namespace {

struct IsoSearch {
  const GroupTable& a;
  const GroupTable& b;
  std::vector<std::uint32_t> gens;                // generating set of a
  std::vector<std::uint32_t> a_orders, b_orders;  // element orders
  std::vector<std::uint32_t> a_cent, b_cent;      // centralizer sizes
  std::uint64_t nodes = 0;
  static constexpr std::uint64_t kNodeBudget = 50'000'000;

  struct State {
    std::vector<std::int32_t> img;   // partial map a -> b, -1 unset
    std::vector<bool> used;          // image elements taken
    std::vector<std::uint32_t> dom;  // mapped subgroup elements, closed
  };

  // extend the map by g -> h and close under products; false on conflict
  bool extend(State& st, std::uint32_t g, std::uint32_t h) {
    if (st.img[g] != -1) return st.img[g] == static_cast<std::int32_t>(h);
    if (st.used[h]) return false;
    st.img[g] = static_cast<std::int32_t>(h);
    st.used[h] = true;
    st.dom.push_back(g);
    for (std::size_t i = 0; i < st.dom.size(); ++i) {
      std::uint32_t u = st.dom[i];
      for (std::size_t j = 0; j < st.dom.size(); ++j) {
        std::uint32_t v = st.dom[j];
        for (auto [w, fw] : {std::pair{a.at(u, v), b.at(st.img[u], st.img[v])},
                             std::pair{a.at(v, u), b.at(st.img[v], st.img[u])}}) {
          if (st.img[w] != -1) {
            if (st.img[w] != static_cast<std::int32_t>(fw)) return false;
          } else {
            if (st.used[fw]) return false;
            st.img[w] = static_cast<std::int32_t>(fw);
            st.used[fw] = true;
            st.dom.push_back(w);
          }
        }
      }
    }
    return true;
  }

  bool dfs(const State& st, std::size_t level) {
    if (level == gens.size()) return st.dom.size() == a.order;
    std::uint32_t g = gens[level];
    if (st.img[g] != -1) return dfs(st, level + 1);  // already forced
    for (std::uint32_t h = 1; h < b.order; ++h) {
      if (st.used[h]) continue;
      if (a_orders[g] != b_orders[h] || a_cent[g] != b_cent[h]) continue;
      if (++nodes > kNodeBudget) throw std::runtime_error("isomorphism search budget exceeded");
      State next = st;
      if (extend(next, g, h) && dfs(next, level + 1)) return true;
    }
    return false;
  }
};

}  // namespace

bool brute_force_iso(const GroupTable& a, const GroupTable& b, std::uint32_t order_cap) {
  if (a.order > order_cap || b.order > order_cap)
    throw std::invalid_argument("group order exceeds the oracle cap");
  if (a.order != b.order) return false;
  if (a.order_histogram() != b.order_histogram()) return false;
  if (a.center_size() != b.center_size()) return false;
  if (a.lower_central_sizes() != b.lower_central_sizes()) return false;
  {
    auto ca = a.element_orders();
    auto cb = b.element_orders();
    std::multiset<std::pair<std::uint32_t, std::uint32_t>> ma, mb;
    for (std::uint32_t u = 0; u < a.order; ++u) {
      ma.emplace(ca[u], a.centralizer_size(u));
      mb.emplace(cb[u], b.centralizer_size(u));
    }
    if (ma != mb) return false;
  }
  bool ab_a = a.is_abelian();
  if (ab_a != b.is_abelian()) return false;
  if (ab_a) return true;  // abelian p-groups: the order histogram is complete

  IsoSearch search{a, b, a.generating_set(), a.element_orders(), b.element_orders(), {}, {}};
  search.a_cent.resize(a.order);
  search.b_cent.resize(b.order);
  for (std::uint32_t u = 0; u < a.order; ++u) search.a_cent[u] = a.centralizer_size(u);
  for (std::uint32_t u = 0; u < b.order; ++u) search.b_cent[u] = b.centralizer_size(u);
  IsoSearch::State root;
  root.img.assign(a.order, -1);
  root.used.assign(b.order, false);
  root.img[0] = 0;
  root.used[0] = true;
  root.dom.push_back(0);
  return search.dfs(root, 0);
}

std::string group_table_to_json(const GroupTable& g) {
  nlohmann::json j;
  j["schema"] = "hopfext-group-v1";
  j["order"] = g.order;
  std::vector<std::vector<std::uint32_t>> rows(g.order);
  for (std::uint32_t u = 0; u < g.order; ++u)
    rows[u].assign(g.mul.begin() + static_cast<std::size_t>(u) * g.order,
                   g.mul.begin() + static_cast<std::size_t>(u + 1) * g.order);
  j["mul"] = rows;
  j["abelian"] = g.is_abelian();
  j["exponent"] = g.exponent();
  return j.dump(2);
}

GroupTable group_table_from_json(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  if (!j.contains("schema") || j["schema"] != "hopfext-group-v1")
    throw std::invalid_argument("unrecognized group schema");
  std::uint32_t order = j.at("order").get<std::uint32_t>();
  std::vector<std::uint32_t> mul;
  for (const auto& row : j.at("mul")) {
    if (row.size() != order) throw std::invalid_argument("ragged multiplication table");
    for (const auto& x : row) mul.push_back(x.get<std::uint32_t>());
  }
  GroupTable g(order, std::move(mul));
  if (!g.is_group()) throw std::invalid_argument("table is not a group");
  return g;
}

}  // namespace hopfext
