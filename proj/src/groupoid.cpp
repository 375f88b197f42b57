#include "orbitgames/groupoid.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace orbitgames {

namespace {

std::string pair_str(int a, int b) { return "(" + std::to_string(a) + "," + std::to_string(b) + ")"; }

}  // namespace

FiniteGroupoid::FiniteGroupoid(int n_arrows, SmallSet objects, std::vector<int> src, std::vector<int> rng,
                               const std::vector<Triple>& comp, std::vector<int> inv,
                               std::vector<SmallSet> basis)
    : n_arrows_(n_arrows),
      objects_(objects),
      src_(std::move(src)),
      rng_(std::move(rng)),
      inv_(std::move(inv)),
      basis_(std::move(basis)) {
  check_capacity(n_arrows_, "FiniteGroupoid");
  const auto n = static_cast<std::size_t>(n_arrows_);
  auto in_range = [this](int a) { return a >= 0 && a < n_arrows_; };
  if (!objects_.subset_of(arrows())) throw std::invalid_argument("FiniteGroupoid: object flag on a missing arrow");
  if (src_.size() != n || rng_.size() != n || inv_.size() != n)
    throw std::invalid_argument("FiniteGroupoid: src, rng and inv need one entry per arrow");
  for (std::size_t a = 0; a < n; ++a)
    if (!in_range(src_[a]) || !in_range(rng_[a]) || !in_range(inv_[a]))
      throw std::invalid_argument("FiniteGroupoid: arrow " + std::to_string(a) + " refers outside the arrows");
  comp_.assign(n * n, -1);
  for (const auto& [a, b, c] : comp) {
    if (!in_range(a) || !in_range(b) || !in_range(c))
      throw std::invalid_argument("FiniteGroupoid: composition triple out of range");
    int& slot = comp_[static_cast<std::size_t>(a * n_arrows_ + b)];
    if (slot >= 0 && slot != c)
      throw std::invalid_argument("FiniteGroupoid: conflicting composition for " + pair_str(a, b));
    slot = c;
  }
  arrow_space_ = FiniteSpace(n_arrows_, basis_);
}

std::vector<FiniteGroupoid::Triple> FiniteGroupoid::comp_triples() const {
  std::vector<Triple> out;
  for (int a = 0; a < n_arrows_; ++a)
    for (int b = 0; b < n_arrows_; ++b)
      if (comp(a, b) >= 0) out.push_back({a, b, comp(a, b)});
  return out;
}

FiniteSpace FiniteGroupoid::object_space() const {
  const auto ids = object_ids();
  std::vector<SmallSet> traces;
  for (const auto& b : basis_) {
    SmallSet t;
    for (std::size_t i = 0; i < ids.size(); ++i)
      if (b.contains(ids[i])) t.insert(static_cast<int>(i));
    if (!t.empty() && std::find(traces.begin(), traces.end(), t) == traces.end()) traces.push_back(t);
  }
  return FiniteSpace(static_cast<int>(ids.size()), std::move(traces));
}

SmallSet FiniteGroupoid::product(SmallSet a, SmallSet b) const {
  SmallSet out;
  a.for_each([&](int x) {
    b.for_each([&](int y) {
      const int c = comp(x, y);
      if (c >= 0) out.insert(c);
    });
  });
  return out;
}

ValidationReport validate_groupoid(const FiniteGroupoid& g) {
  ValidationReport report = g.arrow_space().validate();
  const int n = g.n_arrows();
  const SmallSet objs = g.objects();
  if (objs.empty()) report.add("objects", "the groupoid has no objects", {});
  for (int a = 0; a < n; ++a) {
    if (!objs.contains(g.src(a)) || !objs.contains(g.rng(a)))
      report.add("endpoints", "source or range of arrow " + std::to_string(a) + " is not an object", {a});
    if (objs.contains(a) && (g.src(a) != a || g.rng(a) != a))
      report.add("endpoints", "object " + std::to_string(a) + " is not its own source and range", {a});
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      const bool composable = g.src(a) == g.rng(b);
      const int c = g.comp(a, b);
      if (composable && c < 0)
        report.add("composition-missing", "no composite for composable pair " + pair_str(a, b), {a, b});
      else if (!composable && c >= 0)
        report.add("composition-extra", "composite given for non-composable pair " + pair_str(a, b), {a, b});
      else if (c >= 0 && (g.src(c) != g.src(b) || g.rng(c) != g.rng(a)))
        report.add("composition-endpoints", "composite of " + pair_str(a, b) + " has wrong endpoints", {a, b, c});
    }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      const int ab = g.comp(a, b);
      if (ab < 0) continue;
      for (int c = 0; c < n; ++c) {
        const int bc = g.comp(b, c);
        if (bc < 0) continue;
        const int left = g.comp(ab, c), right = g.comp(a, bc);
        if (left != right)
          report.add("associativity", "(ab)c != a(bc) at (" + std::to_string(a) + "," + std::to_string(b) +
                                          "," + std::to_string(c) + ")",
                     {a, b, c});
      }
    }
  for (int a = 0; a < n; ++a) {
    if (g.comp(a, g.src(a)) != a || g.comp(g.rng(a), a) != a)
      report.add("identity", "identities are not neutral for arrow " + std::to_string(a), {a});
    if (g.comp(g.inv(a), a) != g.src(a) || g.comp(a, g.inv(a)) != g.rng(a))
      report.add("inverse", "inverse of arrow " + std::to_string(a) + " is wrong", {a});
  }
  const FiniteSpace& space = g.arrow_space();
  const auto& basis = g.basis();
  for (std::size_t i = 0; i < basis.size(); ++i) {
    SmallSet img;
    basis[i].for_each([&](int a) { img.insert(g.inv(a)); });
    if (!space.is_open(img))
      report.add("inversion-open", "inverse image of basis set " + std::to_string(i) + " is not open",
                 {static_cast<int>(i)});
  }
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = 0; j < basis.size(); ++j) {
      const SmallSet prod = g.product(basis[i], basis[j]);
      if (!space.is_open(prod))
        report.add("composition-open",
                   "product of basis sets " + std::to_string(i) + " and " + std::to_string(j) + " is not open",
                   {static_cast<int>(i), static_cast<int>(j)});
    }
  return report;
}

FiniteGroupoid action_groupoid(const GroupAction& action) {
  action.require_valid();
  const TopGroup& grp = action.group();
  const FiniteSpace& space = action.space();
  const int n = space.n_points();
  const int order = grp.order();
  const int arrows = order * n;
  check_capacity(arrows, "action groupoid");
  const int e = grp.identity();

  SmallSet objects;
  std::vector<int> src(static_cast<std::size_t>(arrows)), rng(src), inv(src);
  for (int h = 0; h < order; ++h)
    for (int x = 0; x < n; ++x) {
      const auto a = static_cast<std::size_t>(h * n + x);
      src[a] = e * n + x;
      rng[a] = e * n + action.apply(h, x);
      inv[a] = grp.inverse(h) * n + action.apply(h, x);
      if (h == e) objects.insert(h * n + x);
    }
  std::vector<FiniteGroupoid::Triple> comp;
  for (int h = 0; h < order; ++h)
    for (int x = 0; x < n; ++x)
      for (int h2 = 0; h2 < order; ++h2)
        for (int y = 0; y < n; ++y)
          if (x == action.apply(h2, y)) comp.push_back({h * n + x, h2 * n + y, grp.mult(h, h2) * n + y});

  std::vector<SmallSet> cosets;
  for (const auto& v : grp.filter_chain())
    for (int g = 0; g < order; ++g) {
      const SmallSet c = grp.left_translate(g, v);
      if (std::find(cosets.begin(), cosets.end(), c) == cosets.end()) cosets.push_back(c);
    }
  std::vector<SmallSet> basis;
  for (const auto& c : cosets)
    for (const auto& u : space.basis()) {
      SmallSet rect;
      c.for_each([&](int h) { u.for_each([&](int x) { rect.insert(h * n + x); }); });
      if (std::find(basis.begin(), basis.end(), rect) == basis.end()) basis.push_back(rect);
    }
  return FiniteGroupoid(arrows, objects, std::move(src), std::move(rng), comp, std::move(inv), std::move(basis));
}

FiniteGroupoid restrict_groupoid(const FiniteGroupoid& g, SmallSet x) {
  if (!x.subset_of(g.objects()))
    throw std::invalid_argument("restrict_groupoid: " + x.str() + " is not a set of objects");
  std::vector<int> renumber(static_cast<std::size_t>(g.n_arrows()), -1);
  std::vector<int> kept;
  for (int a = 0; a < g.n_arrows(); ++a)
    if (x.contains(g.src(a)) && x.contains(g.rng(a))) {
      renumber[static_cast<std::size_t>(a)] = static_cast<int>(kept.size());
      kept.push_back(a);
    }
  auto re = [&](int a) { return renumber[static_cast<std::size_t>(a)]; };
  SmallSet objects;
  std::vector<int> src, rng, inv;
  for (int a : kept) {
    if (g.objects().contains(a)) objects.insert(re(a));
    src.push_back(re(g.src(a)));
    rng.push_back(re(g.rng(a)));
    inv.push_back(re(g.inv(a)));
  }
  std::vector<FiniteGroupoid::Triple> comp;
  for (const auto& [a, b, c] : g.comp_triples())
    if (re(a) >= 0 && re(b) >= 0) comp.push_back({re(a), re(b), re(c)});
  std::vector<SmallSet> basis;
  for (const auto& b : g.basis()) {
    SmallSet t;
    b.for_each([&](int a) {
      if (re(a) >= 0) t.insert(re(a));
    });
    basis.push_back(t);
  }
  return FiniteGroupoid(static_cast<int>(kept.size()), objects, std::move(src), std::move(rng), comp,
                        std::move(inv), std::move(basis));
}

SmallSet groupoid_local_orbit(const FiniteGroupoid& g, int x, SmallSet u) {
  if (!g.objects().contains(x)) throw std::invalid_argument("groupoid_local_orbit: " + std::to_string(x) + " is not an object");
  if (!u.contains(x)) throw std::invalid_argument("groupoid_local_orbit: object " + std::to_string(x) + " is not in U");
  const SmallSet allowed = u & g.objects();
  SmallSet orbit = SmallSet::singleton(x);
  for (bool grew = true; grew;) {
    grew = false;
    u.for_each([&](int gamma) {
      const int target = g.rng(gamma);
      if (orbit.contains(g.src(gamma)) && allowed.contains(target) && !orbit.contains(target)) {
        orbit.insert(target);
        grew = true;
      }
    });
  }
  return orbit;
}

Partition groupoid_orbit_partition(const FiniteGroupoid& g) {
  Partition blocks;
  SmallSet seen;
  g.objects().for_each([&](int x) {
    if (seen.contains(x)) return;
    SmallSet block;
    for (int a = 0; a < g.n_arrows(); ++a)
      if (g.src(a) == x) block.insert(g.rng(a));
    block.insert(x);
    blocks.push_back(block);
    seen |= block;
  });
  return blocks;
}

}  // namespace orbitgames
