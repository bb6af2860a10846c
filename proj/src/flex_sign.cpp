#include "rigi/flex_sign.hpp"

#include <algorithm>
#include <map>
#include <random>

namespace rigi {

namespace {

int sign_of(const Rat& x) { return sgn(x); }

Rat dot3(const std::array<Rat, 3>& a, const std::array<Rat, 3>& b) {
  return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}

std::array<Rat, 3> sub3(const std::array<Rat, 3>& a,
                        const std::array<Rat, 3>& b) {
  return {a[0] - b[0], a[1] - b[1], a[2] - b[2]};
}

Rat det3(const std::array<Rat, 3>& a, const std::array<Rat, 3>& b,
         const std::array<Rat, 3>& c) {
  return a[0] * (b[1] * c[2] - b[2] * c[1]) -
         a[1] * (b[0] * c[2] - b[2] * c[0]) +
         a[2] * (b[0] * c[1] - b[1] * c[0]);
}

// Derivative of |p_a - p_b|^2 along motion v (up to the factor 2).
Rat pair_derivative(const Framework<Rat>& f, const std::vector<Rat>& v,
                    VertexPair p) {
  std::array<Rat, 3> dp = sub3(f.coords[p.u], f.coords[p.v]);
  std::array<Rat, 3> dv = {v[3 * p.u] - v[3 * p.v], v[3 * p.u + 1] - v[3 * p.v + 1],
                           v[3 * p.u + 2] - v[3 * p.v + 2]};
  return dot3(dp, dv);
}

// Classifies the cone over the base cycle as seen from the apex: turns of
// the direction vectors around the spherical quadrilateral.
enum class QuadShape { Convex, Pointed, Other };

QuadShape classify_from_apex(const std::array<std::array<Rat, 3>, 4>& cycle,
                             const std::array<Rat, 3>& apex) {
  std::array<std::array<Rat, 3>, 4> d;
  for (int i = 0; i < 4; ++i) d[i] = sub3(cycle[i], apex);
  int pos = 0, neg = 0, zero = 0;
  for (int i = 0; i < 4; ++i) {
    int s = sign_of(det3(d[i], d[(i + 1) % 4], d[(i + 2) % 4]));
    if (s > 0) ++pos;
    else if (s < 0) ++neg;
    else ++zero;
  }
  if (zero > 0) return QuadShape::Other;
  if (pos == 4 || neg == 4) return QuadShape::Convex;
  if (pos == 1 || neg == 1) return QuadShape::Pointed;
  return QuadShape::Other;
}

// Exact planar tests for the fixed realizations.
int orient2(const Rat& ax, const Rat& ay, const Rat& bx, const Rat& by,
            const Rat& cx, const Rat& cy) {
  return sign_of((bx - ax) * (cy - ay) - (by - ay) * (cx - ax));
}

bool segments_cross(const std::array<Rat, 2>& a, const std::array<Rat, 2>& b,
                    const std::array<Rat, 2>& c, const std::array<Rat, 2>& d) {
  int o1 = orient2(a[0], a[1], b[0], b[1], c[0], c[1]);
  int o2 = orient2(a[0], a[1], b[0], b[1], d[0], d[1]);
  int o3 = orient2(c[0], c[1], d[0], d[1], a[0], a[1]);
  int o4 = orient2(c[0], c[1], d[0], d[1], b[0], b[1]);
  return o1 != 0 && o2 != 0 && o3 != 0 && o4 != 0 && o1 != o2 && o3 != o4;
}

QuadShape classify_planar_quad(const std::array<std::array<Rat, 2>, 4>& q) {
  int pos = 0, neg = 0, zero = 0;
  for (int i = 0; i < 4; ++i) {
    const auto& a = q[i];
    const auto& b = q[(i + 1) % 4];
    const auto& c = q[(i + 2) % 4];
    int s = orient2(a[0], a[1], b[0], b[1], c[0], c[1]);
    if (s > 0) ++pos;
    else if (s < 0) ++neg;
    else ++zero;
  }
  if (zero > 0) return QuadShape::Other;
  bool cross = segments_cross(q[0], q[1], q[2], q[3]) ||
               segments_cross(q[1], q[2], q[3], q[0]);
  if (cross) return QuadShape::Other;
  if (pos == 4 || neg == 4) return QuadShape::Convex;
  return QuadShape::Pointed;
}

// The roof graph in generator layout; base cycle is 0 -> 2 -> 1 -> 3.
Framework<Rat> roof_framework(const std::array<std::array<Rat, 3>, 5>& pts) {
  Framework<Rat> f;
  f.graph = roof().graph;
  f.coords.assign(pts.begin(), pts.end());
  return f;
}

// Per-roof coupling: signs of the internal motion's derivative on the two
// hinges. Requires internal dimension exactly 1 and strict signs.
struct Coupling {
  bool ok = false;
  int s1 = 0, s2 = 0;
};

Coupling roof_coupling(const Framework<Rat>& f, VertexPair h1, VertexPair h2) {
  auto internal = internal_motions(f);
  Coupling c;
  if (internal.size() != 1) return c;
  c.s1 = sign_of(pair_derivative(f, internal[0], h1));
  c.s2 = sign_of(pair_derivative(f, internal[0], h2));
  c.ok = c.s1 != 0 && c.s2 != 0;
  return c;
}

// Complex rationals drive the planar hinge-chain layout.
struct CQ {
  Rat re, im;
  CQ() : re(0), im(0) {}
  CQ(Rat r, Rat i) : re(std::move(r)), im(std::move(i)) {}
  friend CQ operator+(const CQ& a, const CQ& b) {
    return {a.re + b.re, a.im + b.im};
  }
  friend CQ operator-(const CQ& a, const CQ& b) {
    return {a.re - b.re, a.im - b.im};
  }
  friend CQ operator*(const CQ& a, const CQ& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend CQ operator/(const CQ& a, const CQ& b) {
    Rat n = b.re * b.re + b.im * b.im;
    return {(a.re * b.re + a.im * b.im) / n, (a.im * b.re - a.re * b.im) / n};
  }
};

struct HingeSeg {
  CQ a, b;
};

// One dart step: the similarity pinned to the current hinge segment maps the
// standard base [0,4] to it and emits the standard dart's second hinge.
HingeSeg dart_step(const HingeSeg& h, const CQ& u, const CQ& v) {
  CQ d = h.b - h.a;
  return {h.a + d * u, h.a + d * v};
}

struct DartParams {
  CQ u, v;
};

std::vector<DartParams> dart_candidates() {
  std::vector<DartParams> out;
  auto cq = [](long nr, long ni, long d) {
    return CQ(Rat(nr, d), Rat(ni, d));
  };
  out.push_back({cq(1, 1, 4), cq(2, 3, 4)});
  out.push_back({cq(1, -1, 4), cq(2, -3, 4)});
  for (long b1 : {1L, -1L, 2L, -2L})
    for (long a2 : {3L, 4L, 5L, 6L})
      for (long b2 : {2L, 3L, 4L, 5L, 6L, -2L, -3L, -4L, -5L, -6L}) {
        out.push_back({cq(2, b1, 8), cq(a2, b2, 8)});
        out.push_back({cq(1, b1, 8), cq(a2, b2, 8)});
      }
  // Keep only parameter pairs whose standard quad is a strict dart.
  std::vector<DartParams> valid;
  for (const auto& p : out) {
    std::array<std::array<Rat, 2>, 4> quad = {{{Rat(0), Rat(0)},
                                               {p.u.re * 4, p.u.im * 4},
                                               {Rat(4), Rat(0)},
                                               {p.v.re * 4, p.v.im * 4}}};
    if (classify_planar_quad(quad) == QuadShape::Pointed) valid.push_back(p);
  }
  return valid;
}

// Segments crossing the interior of the base hinge [(0,0), (4,0)]; each
// makes the quad on (hinge 0, hinge 1) convex.
std::vector<HingeSeg> closer_candidates() {
  std::vector<HingeSeg> out;
  auto seg = [](long ax, long ay, long bx, long by) {
    return HingeSeg{CQ(Rat(ax), Rat(ay)), CQ(Rat(bx), Rat(by))};
  };
  for (auto s : {seg(2, -2, 2, 2), seg(1, -1, 3, 3), seg(3, -1, 1, 3),
                 seg(1, -2, 2, 2), seg(3, -2, 2, 3), seg(2, -1, 3, 2),
                 seg(1, -3, 3, 1), seg(3, -3, 1, 1), seg(2, -4, 3, 4),
                 seg(1, -1, 2, 4), seg(3, -4, 2, 1), seg(2, -2, 1, 1)}) {
    out.push_back(s);
    out.push_back({s.b, s.a});  // swapped orientation
  }
  return out;
}

struct Assembly {
  bool ok = false;
  Framework<Rat> framework;
  std::vector<std::array<VertexPair, 2>> roof_hinges;  // per roof
};

std::array<Rat, 3> quad_apex(const std::array<std::array<Rat, 3>, 4>& base,
                             const Rat& height_num, const Rat& height_den) {
  std::array<Rat, 3> c = {Rat(0), Rat(0), Rat(0)};
  for (const auto& p : base)
    for (int i = 0; i < 3; ++i) c[i] += p[i] / 4;
  Rat dx(0), dy(0);
  for (const auto& p : base)
    for (const auto& q : base) {
      Rat ax = abs(p[0] - q[0]), ay = abs(p[1] - q[1]);
      if (ax > dx) dx = ax;
      if (ay > dy) dy = ay;
    }
  c[2] = (dx + dy) * height_num / height_den;
  return c;
}

QuadShape classify_hinge_quad(const HingeSeg& g, const HingeSeg& h) {
  // Roof base cycle on hinge pair (g, h) in the plane.
  return classify_planar_quad({{{g.a.re, g.a.im},
                                {h.a.re, h.a.im},
                                {g.b.re, g.b.im},
                                {h.b.re, h.b.im}}});
}

// Lays out the hinge chain in the plane z = 0. Hinges 0 and 1 are fixed
// crossing segments carrying the single convex roof; hinges 2..k-1 follow by
// standard dart steps; the last dart's shape parameters are solved so the
// chain lands on hinge 0 exactly.
Assembly assemble_ring(int k, const HingeSeg& h1, const DartParams& dp,
                       const Rat& hnum, const Rat& hden) {
  Assembly out;
  std::vector<HingeSeg> h(k);
  h[0] = {CQ(Rat(0), Rat(0)), CQ(Rat(4), Rat(0))};
  h[1] = h1;
  if (classify_hinge_quad(h[0], h[1]) != QuadShape::Convex) return out;
  for (int i = 2; i < k; ++i) {
    h[i] = dart_step(h[i - 1], dp.u, dp.v);
    if (classify_hinge_quad(h[i - 1], h[i]) != QuadShape::Pointed) return out;
  }
  // The final step from hinge k-1 back to hinge 0 has its dart parameters
  // determined by closure; it must still come out strictly pointed.
  if (classify_hinge_quad(h[k - 1], h[0]) != QuadShape::Pointed) return out;

  Framework<Rat> f;
  f.graph = ring_of_roofs(k).graph;
  f.coords.assign(3 * k, {Rat(0), Rat(0), Rat(0)});
  for (int i = 0; i < k; ++i) {
    f.coords[2 * i] = {h[i].a.re, h[i].a.im, Rat(0)};
    f.coords[2 * i + 1] = {h[i].b.re, h[i].b.im, Rat(0)};
  }
  for (int i = 0; i < k; ++i) {
    int j = (i + 1) % k;
    std::array<std::array<Rat, 3>, 4> base = {
        f.coords[2 * i], f.coords[2 * j], f.coords[2 * i + 1],
        f.coords[2 * j + 1]};
    f.coords[2 * k + i] = quad_apex(base, hnum, hden);
  }
  out.framework = std::move(f);
  out.roof_hinges.resize(k);
  for (int i = 0; i < k; ++i) {
    int j = (i + 1) % k;
    out.roof_hinges[i] = {make_pair_sorted(2 * i, 2 * i + 1),
                          make_pair_sorted(2 * j, 2 * j + 1)};
  }
  out.ok = true;
  return out;
}

Framework<Rat> roof_restriction(const Framework<Rat>& ring, int k, int i) {
  int j = (i + 1) % k;
  return roof_framework({ring.coords[2 * i], ring.coords[2 * i + 1],
                         ring.coords[2 * j], ring.coords[2 * j + 1],
                         ring.coords[2 * k + i]});
}

// Verifies the per-roof shape and strict sign couplings: roof 0 convex with
// opposite signs, the rest pointed with equal signs.
bool verify_roofs(const Framework<Rat>& ring, int k, std::vector<int>* sigma,
                  std::vector<std::array<int, 2>>* signs = nullptr) {
  if (sigma) sigma->assign(k, 0);
  if (signs) signs->assign(k, {0, 0});
  for (int i = 0; i < k; ++i) {
    Framework<Rat> rf = roof_restriction(ring, k, i);
    std::array<std::array<Rat, 3>, 4> cycle = {rf.coords[0], rf.coords[2],
                                               rf.coords[1], rf.coords[3]};
    QuadShape shape = classify_from_apex(cycle, rf.coords[4]);
    Coupling c = roof_coupling(rf, {0, 1}, {2, 3});
    if (!c.ok) return false;
    int sg = c.s1 * c.s2;
    if (i == 0) {
      if (shape != QuadShape::Convex || sg != -1) return false;
    } else {
      if (shape != QuadShape::Pointed || sg != 1) return false;
    }
    if (sigma) (*sigma)[i] = sg;
    if (signs) (*signs)[i] = {c.s1, c.s2};
  }
  return true;
}

bool motions_fix_all_hinges(const Framework<Rat>& ring, int k) {
  auto motions = motion_space(ring);
  for (const auto& v : motions.vectors)
    for (int i = 0; i < k; ++i) {
      if (sign_of(pair_derivative(ring, v, {2 * i, 2 * i + 1})) != 0)
        return false;
    }
  return true;
}

}  // namespace

RoofRealization realize_roof(RoofKind kind) {
  auto pt = [](long x, long y, long z) {
    return std::array<Rat, 3>{Rat(x), Rat(y), Rat(z)};
  };
  RoofRealization out;
  out.kind = kind;
  out.hinges = {VertexPair{0, 1}, VertexPair{2, 3}};
  switch (kind) {
    case RoofKind::Convex:
      // Square base traversed 0 -> 2 -> 1 -> 3; hinges are the diagonals.
      out.framework =
          roof_framework({pt(0, 0, 0), pt(2, 2, 0), pt(2, 0, 0), pt(0, 2, 0),
                          pt(1, 1, 1)});
      break;
    case RoofKind::Pointed:
      // Dart base with the reflex corner at vertex 2.
      out.framework = roof_framework(
          {pt(0, 0, 0), pt(4, 0, 0), pt(1, 1, 0), pt(2, 3, 0),
           {Rat(7, 4), Rat(1), Rat(1)}});
      break;
    case RoofKind::Crossing:
      // Butterfly base: opposite square corners adjacent.
      out.framework =
          roof_framework({pt(0, 0, 0), pt(0, 2, 0), pt(2, 0, 0), pt(2, 2, 0),
                          pt(1, 1, 1)});
      break;
  }
  auto internal = internal_motions(out.framework);
  if (internal.size() != 1)
    throw Error(ErrorCode::AssemblyFailed,
                "roof realization must have one internal motion");
  if (kind != RoofKind::Crossing) {
    Coupling c = roof_coupling(out.framework, {0, 1}, {2, 3});
    int want = kind == RoofKind::Convex ? -1 : 1;
    if (!c.ok || c.s1 * c.s2 != want)
      throw Error(ErrorCode::AssemblyFailed,
                  "roof realization lost its sign property");
  }
  return out;
}

std::vector<std::vector<int>> hinge_sign_pattern(
    const Framework<Rat>& f, const std::vector<VertexPair>& pairs) {
  std::vector<std::vector<int>> out;
  for (const auto& v : internal_motions(f)) {
    std::vector<int> row;
    for (const auto& p : pairs)
      row.push_back(sign_of(pair_derivative(f, v, p)));
    out.push_back(std::move(row));
  }
  return out;
}

FlexSignCertificate flex_sign_certificate(int k, int perturbations,
                                          std::uint64_t seed) {
  if (k < 3) throw Error(ErrorCode::BadParameter, "ring needs k >= 3");
  FlexSignCertificate cert;
  cert.k = k;
  cert.seed = seed;
  cert.perturbations = perturbations;
  if (k < 7) {
    cert.applicable = false;
    cert.ring_dof = dof(ring_of_roofs(k).graph);
    return cert;
  }
  cert.applicable = true;

  Assembly assembly;
  for (const auto& dp : dart_candidates()) {
    for (const auto& h1 : closer_candidates()) {
      for (auto [hn, hd] : {std::pair{1L, 2L}, {1L, 1L}, {1L, 4L}, {2L, 1L}}) {
        Assembly a = assemble_ring(k, h1, dp, Rat(hn), Rat(hd));
        if (!a.ok) continue;
        if (!verify_roofs(a.framework, k, nullptr)) continue;
        assembly = std::move(a);
        break;
      }
      if (assembly.ok) break;
    }
    if (assembly.ok) break;
  }
  if (!assembly.ok)
    throw Error(ErrorCode::AssemblyFailed,
                "no hinge-chain closure produced valid roofs");

  cert.framework = assembly.framework;
  verify_roofs(cert.framework, k, &cert.sigma, &cert.roof_signs);
  long long prod = 1;
  for (int s : cert.sigma) prod *= s;
  cert.parity_holds = prod == -1;
  cert.motions_fix_hinges = motions_fix_all_hinges(cert.framework, k);

  // Perturb every coordinate by small rationals that keep every roof
  // strictly convex/pointed, then re-verify both checks.
  Rat scale(1);
  for (const auto& p : cert.framework.coords)
    for (int c = 0; c < 3; ++c) {
      Rat a = abs(p[c]);
      if (a > scale) scale = a;
    }
  bool stable = true;
  for (int round = 0; round < perturbations && stable; ++round) {
    Framework<Rat> pert;
    bool valid = false;
    Rat eps = scale / 1000000;
    for (int attempt = 0; attempt < 4 && !valid; ++attempt) {
      pert = cert.framework;
      std::mt19937_64 round_rng(splitmix64(seed ^ (round * 1000003ull + attempt)));
      for (auto& p : pert.coords)
        for (int c = 0; c < 3; ++c) {
          long r = static_cast<long>(round_rng() % 2001) - 1000;
          p[c] += eps * Rat(r, 1000);
        }
      std::vector<int> sigma;
      valid = verify_roofs(pert, k, &sigma) && sigma == cert.sigma;
      eps /= 1000;
    }
    stable = valid && motions_fix_all_hinges(pert, k);
  }
  cert.perturbation_stable = stable;
  return cert;
}

ProbeReport coincident_probe(const Graph& h, VertexPair ab,
                             const EdgeDistribution& dist,
                             std::uint64_t seed) {
  RoofAdditionIds ids{};
  ConstructionResult added = roof_addition(h, ab, dist, &ids);
  const Graph& g = added.graph;

  Framework<Rat> f;
  f.graph = g;
  f.coords.assign(g.n, {Rat(0), Rat(0), Rat(0)});
  std::mt19937_64 rng(seed);
  for (Vertex x = 0; x < h.n; ++x) {
    if (x == ab.u || x == ab.v) continue;
    for (int c = 0; c < 3; ++c)
      f.coords[x][c] = Rat(static_cast<long>(5 + rng() % 4096));
  }
  auto pt = [](long x, long y, long z) {
    return std::array<Rat, 3>{Rat(x), Rat(y), Rat(z)};
  };
  // The four hinge points form a square in the xy-plane, hinge parallel to
  // the y-axis; a2 sits on a1 and b2 on b1.
  f.coords[ids.a1] = pt(0, 0, 0);
  f.coords[ids.a2] = pt(0, 0, 0);
  f.coords[ids.b1] = pt(0, 2, 0);
  f.coords[ids.b2] = pt(0, 2, 0);
  f.coords[ids.u] = pt(2, 0, 0);
  f.coords[ids.v] = pt(2, 2, 0);
  f.coords[ids.c] = pt(1, 1, 1);
  f.coords[ids.c2] = pt(1, 1, -1);

  Mat<Rat> rm = rigidity_matrix(f);
  auto stresses = left_nullspace(rm);

  ProbeReport rep;
  rep.stress_dim = stresses.dimension();

  std::map<VertexPair, std::size_t> edge_index;
  for (std::size_t i = 0; i < g.edges.size(); ++i) edge_index[g.edges[i]] = i;
  auto sidx = [&](Vertex x, Vertex y) {
    return edge_index.at(make_pair_sorted(x, y));
  };

  auto term = [&](const std::vector<Rat>& s, Vertex x, Vertex y) {
    Rat sv = s[sidx(x, y)];
    auto d = sub3(f.coords[x], f.coords[y]);
    return std::array<Rat, 3>{sv * d[0], sv * d[1], sv * d[2]};
  };
  auto add3 = [](std::array<Rat, 3> a, const std::array<Rat, 3>& b) {
    for (int i = 0; i < 3; ++i) a[i] += b[i];
    return a;
  };
  auto zero3 = [](const std::array<Rat, 3>& a) {
    return sgn(a[0]) == 0 && sgn(a[1]) == 0 && sgn(a[2]) == 0;
  };

  rep.claim_apex_projections = true;
  rep.claim_roof_terms_cancel = true;
  rep.claim_restriction_stress = true;
  for (const auto& s : stresses.vectors) {
    // Stress pairs at the apexes: xy-projections on the two diagonal lines.
    bool c1 = s[sidx(ids.c, ids.u)] == s[sidx(ids.c, ids.b1)] &&
              s[sidx(ids.c, ids.v)] == s[sidx(ids.c, ids.a1)] &&
              s[sidx(ids.c2, ids.u)] == s[sidx(ids.c2, ids.b2)] &&
              s[sidx(ids.c2, ids.v)] == s[sidx(ids.c2, ids.a2)];
    rep.claim_apex_projections = rep.claim_apex_projections && c1;

    // Four-term and two-term cancellations at a1/a2 and b1/b2.
    auto four_a = add3(add3(term(s, ids.a2, ids.c2), term(s, ids.a1, ids.c)),
                       add3(term(s, ids.a1, ids.v), term(s, ids.a2, ids.v)));
    auto two_a = add3(term(s, ids.a2, ids.u), term(s, ids.a1, ids.u));
    auto four_b = add3(add3(term(s, ids.b2, ids.c2), term(s, ids.b1, ids.c)),
                       add3(term(s, ids.b1, ids.u), term(s, ids.b2, ids.u)));
    auto two_b = add3(term(s, ids.b1, ids.v), term(s, ids.b2, ids.v));
    rep.claim_roof_terms_cancel = rep.claim_roof_terms_cancel &&
                                  zero3(four_a) && zero3(two_a) &&
                                  zero3(four_b) && zero3(two_b);

    // Restricting to H's edges must balance on H's glued framework.
    Framework<Rat> fh;
    fh.graph = h;
    fh.coords.assign(h.n, {Rat(0), Rat(0), Rat(0)});
    for (Vertex x = 0; x < h.n; ++x) fh.coords[x] = f.coords[x];
    fh.coords[ab.u] = f.coords[ids.a1];
    fh.coords[ab.v] = f.coords[ids.b1];
    Mat<Rat> rh = rigidity_matrix(fh);
    std::vector<Rat> sh(h.edges.size(), Rat(0));
    for (std::size_t i = 0; i < h.edges.size(); ++i) {
      Vertex x = h.edges[i].u, y = h.edges[i].v;
      auto map_end = [&](Vertex z, Vertex other) -> Vertex {
        if (z == ab.u) return dist.at_a.at(other) == 1 ? ids.a1 : ids.a2;
        if (z == ab.v) return dist.at_b.at(other) == 1 ? ids.b1 : ids.b2;
        return z;
      };
      sh[i] = s[sidx(map_end(x, y), map_end(y, x))];
    }
    auto residual = vec_mat(sh, rh);
    bool balanced = std::all_of(residual.begin(), residual.end(),
                                [](const Rat& r) { return sgn(r) == 0; });
    rep.claim_restriction_stress = rep.claim_restriction_stress && balanced;
  }

  // Stresses supported on the added roofs alone: left nullspace of the
  // 16-row gadget submatrix.
  std::vector<VertexPair> gadget_edges;
  for (const auto& e : g.edges) {
    bool gadget = false;
    for (Vertex x : {ids.u, ids.v, ids.c, ids.c2})
      gadget = gadget || e.u == x || e.v == x;
    if (gadget) gadget_edges.push_back(e);
  }
  Mat<Rat> gm(gadget_edges.size(), 3 * static_cast<std::size_t>(g.n));
  for (std::size_t r = 0; r < gadget_edges.size(); ++r)
    for (int c = 0; c < 3; ++c) {
      Rat d = f.coords[gadget_edges[r].u][c] - f.coords[gadget_edges[r].v][c];
      gm.at(r, 3 * gadget_edges[r].u + c) = d;
      gm.at(r, 3 * gadget_edges[r].v + c) = -d;
    }
  rep.gadget_only_stress_dim = left_nullspace(gm).dimension();
  rep.restriction_forced_nonzero = rep.gadget_only_stress_dim == 0;
  return rep;
}

}  // namespace rigi
