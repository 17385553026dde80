#include <algorithm>
#include <memory>
#include <set>

#include "elliskit/ellis.hpp"
#include "elliskit/error.hpp"

namespace elliskit {

namespace {

std::vector<SIdx> image_of(std::vector<SIdx> const& map, std::vector<SIdx> const& set) {
  std::set<SIdx> img;
  for (SIdx f : set) {
    img.insert(map[f]);
  }
  return {img.begin(), img.end()};
}

}  // namespace

EpimorphismReport induced_epimorphism(FlowMorphism const& m, EllisSemigroup const& src,
                                      EllisSemigroup const& dst) {
  EpimorphismReport r;
  std::size_t const none = static_cast<std::size_t>(-1);
  std::size_t const tp = dst.points();
  Map img(tp);
  for (SIdx f = 0; f < src.size(); ++f) {
    std::vector<std::size_t> val(tp, none);
    for (Point z = 0; z < src.points(); ++z) {
      Point pz = m.point_map[z];
      Point v = m.point_map[src.apply(f, z)];
      if (val[pz] == none) {
        val[pz] = v;
      } else if (val[pz] != v) {
        throw Error(ErrorCode::NotWellDefined, "f = " + std::to_string(f) + " separates two points over " +
                                                   std::to_string(pz));
      }
    }
    for (Point q = 0; q < tp; ++q) {
      if (val[q] == none) {
        throw Error(ErrorCode::NotWellDefined, "point map misses " + std::to_string(q));
      }
      img[q] = static_cast<Point>(val[q]);
    }
    auto t = dst.find(img);
    if (!t) {
      throw Error(ErrorCode::NotWellDefined,
                  "image of element " + std::to_string(f) + " is not in the target semigroup");
    }
    r.map.push_back(*t);
  }

  Check surj{"surjective", true, ""};
  std::vector<bool> hit(dst.size(), false);
  for (SIdx t : r.map) {
    hit[t] = true;
  }
  for (SIdx t = 0; t < dst.size(); ++t) {
    if (!hit[t]) {
      surj = {surj.name, false, "target element " + std::to_string(t) + " not hit"};
      break;
    }
  }
  r.checks.push_back(surj);

  // Every element is a word in the generators, so multiplicativity on the
  // edges f -> f * gen extends to all pairs by induction on word length.
  Check hom{"homomorphism", true, ""};
  for (SIdx a = 0; a < src.size() && hom.passed; ++a) {
    for (std::size_t g = 0; g < src.gen_count(); ++g) {
      SIdx s = src.generator_images()[g];
      if (r.map[src.right_by_generator(a, g)] != dst.mul(r.map[a], r.map[s])) {
        hom = {hom.name, false, "(" + std::to_string(a) + ", " + std::to_string(s) + ")"};
        break;
      }
    }
  }
  r.checks.push_back(hom);

  auto src_ideals = minimal_left_ideals(src);
  auto dst_ideals = minimal_left_ideals(dst);
  Check ideals{"minimal_ideals_to_minimal_ideals", true, ""};
  for (std::size_t i = 0; i < src_ideals.size(); ++i) {
    auto im = image_of(r.map, src_ideals[i].members);
    auto it = std::find_if(dst_ideals.begin(), dst_ideals.end(),
                           [&](MinimalIdeal const& d) { return d.members == im; });
    if (it == dst_ideals.end()) {
      ideals = {ideals.name, false, "image of source ideal " + std::to_string(i) + " is not minimal"};
      continue;
    }
    r.ideal_pairs.emplace_back(i, static_cast<std::size_t>(it - dst_ideals.begin()));
  }
  r.checks.push_back(ideals);

  Check idem{"idempotents_to_idempotents", true, ""};
  for (auto const& mi : src_ideals) {
    for (SIdx u : mi.idempotents) {
      SIdx v = r.map[u];
      if (!dst.is_idempotent(v)) {
        idem = {idem.name, false, "idempotent " + std::to_string(u) + " maps to " + std::to_string(v)};
      }
      r.idempotent_pairs.emplace_back(u, v);
    }
  }
  r.checks.push_back(idem);
  return r;
}

TowerReport check_tower(std::vector<Ambit> const& levels,
                        std::vector<FlowMorphism> const& connecting, Caps const& caps) {
  if (levels.empty()) {
    throw Error(ErrorCode::IncompatibleTower, "empty tower");
  }
  if (connecting.size() + 1 != levels.size()) {
    throw Error(ErrorCode::IncompatibleTower, "need one connecting morphism per adjacent pair");
  }
  for (std::size_t i = 0; i < connecting.size(); ++i) {
    auto const& m = connecting[i];
    if (m.source.flow != levels[i + 1].flow || m.target.flow != levels[i].flow ||
        m.source.basepoint != levels[i + 1].basepoint || m.target.basepoint != levels[i].basepoint) {
      throw Error(ErrorCode::IncompatibleTower,
                  "connecting morphism " + std::to_string(i) + " does not join levels " +
                      std::to_string(i + 1) + " and " + std::to_string(i));
    }
    for (auto const& c : check_morphism(m)) {
      if (!c.passed) {
        throw Error(ErrorCode::IncompatibleTower, "level " + std::to_string(i + 1) + " -> " +
                                                      std::to_string(i) + ": " + c.name + " fails (" +
                                                      c.witness + ")");
      }
    }
  }

  TowerReport rep;
  std::vector<EllisSemigroup> sg;
  std::vector<std::vector<MinimalIdeal>> ideals;
  for (auto const& lv : levels) {
    sg.push_back(EllisSemigroup::compute(*lv.flow, caps));
    ideals.push_back(minimal_left_ideals(sg.back()));
    TowerLevelReport t;
    t.ellis_size = sg.back().size();
    t.ideal_count = ideals.back().size();
    for (auto const& m : ideals.back()) {
      t.idempotent_count += m.idempotents.size();
    }
    rep.levels.push_back(t);
  }

  std::vector<EpimorphismReport> epis;
  for (std::size_t i = 0; i < connecting.size(); ++i) {
    epis.push_back(induced_epimorphism(connecting[i], sg[i + 1], sg[i]));
    for (auto c : epis.back().checks) {
      c.name = "level" + std::to_string(i + 1) + "_to_" + std::to_string(i) + "_" + c.name;
      rep.checks.push_back(c);
    }
  }

  // Push the first idempotent of the top level down the tower; each image
  // must be an idempotent of a minimal ideal, and the ideal groups must map
  // onto each other.
  std::size_t const top = levels.size() - 1;
  Check chain{"idempotent_chain_coherent", true, ""};
  SIdx u = ideals[top].front().idempotents.front();
  std::size_t ideal_idx = 0;
  IdealGroup g = ideal_group(sg[top], ideals[top], ideal_idx, u);
  rep.levels[top].chain_idempotent = u;
  rep.levels[top].ideal_group_order = g.group_view.order();
  for (std::size_t i = top; i-- > 0;) {
    SIdx v = epis[i].map[u];
    auto it = std::find_if(ideals[i].begin(), ideals[i].end(),
                           [&](MinimalIdeal const& m) { return m.contains(v); });
    if (it == ideals[i].end() || !sg[i].is_idempotent(v)) {
      chain = {chain.name, false, "level " + std::to_string(i) + ": image " + std::to_string(v) +
                                      " is not an idempotent of a minimal ideal"};
      break;
    }
    std::size_t idx = static_cast<std::size_t>(it - ideals[i].begin());
    IdealGroup h = ideal_group(sg[i], ideals[i], idx, v);
    auto img = image_of(epis[i].map, g.members);
    if (img != h.members) {
      chain = {chain.name, false, "level " + std::to_string(i) + ": uM does not map onto vN"};
      break;
    }
    rep.levels[i].chain_idempotent = v;
    rep.levels[i].ideal_group_order = h.group_view.order();
    u = v;
    g = std::move(h);
  }
  rep.checks.push_back(chain);

  // The top minimal ideal maps onto a minimal ideal at every level through
  // the composite, so M is recovered from its projections.
  Check proj{"top_ideal_projects_onto_levels", true, ""};
  std::vector<SIdx> cur = ideals[top].front().members;
  for (std::size_t i = top; i-- > 0;) {
    cur = image_of(epis[i].map, cur);
    bool ok = std::any_of(ideals[i].begin(), ideals[i].end(),
                          [&](MinimalIdeal const& m) { return m.members == cur; });
    if (!ok) {
      proj = {proj.name, false, "level " + std::to_string(i)};
      break;
    }
  }
  rep.checks.push_back(proj);
  return rep;
}

CheckList check_product_ellis(Flow const& a, Flow const& b, Caps const& caps) {
  CheckList out;
  auto fa = std::make_shared<Flow const>(a);
  auto fb = std::make_shared<Flow const>(b);
  auto fp = std::make_shared<Flow const>(product_flow({a, b}, caps));
  Ambit aa{fa, 0};
  Ambit ab{fb, 0};
  auto sa = EllisSemigroup::compute(a, caps);
  auto sb = EllisSemigroup::compute(b, caps);
  auto sp = EllisSemigroup::compute(*fp, caps);
  auto p0 = induced_epimorphism(product_projection(fp, aa, ab, 0), sp, sa);
  auto p1 = induced_epimorphism(product_projection(fp, aa, ab, 1), sp, sb);
  for (auto c : p0.checks) {
    c.name = "projection0_" + c.name;
    out.push_back(c);
  }
  for (auto c : p1.checks) {
    c.name = "projection1_" + c.name;
    out.push_back(c);
  }

  // f -> (p0(f), p1(f)) must be a bijection onto EL1 x EL2; it is a
  // homomorphism because both coordinates are.
  Check bij{"product_iso_bijective", true, ""};
  if (sp.size() != sa.size() * sb.size()) {
    bij = {bij.name, false, std::to_string(sp.size()) + " != " + std::to_string(sa.size()) + " * " +
                                std::to_string(sb.size())};
  } else {
    std::vector<bool> hit(sp.size(), false);
    for (SIdx f = 0; f < sp.size(); ++f) {
      std::size_t pair = static_cast<std::size_t>(p0.map[f]) * sb.size() + p1.map[f];
      if (hit[pair]) {
        bij = {bij.name, false, "pair hit twice by element " + std::to_string(f)};
        break;
      }
      hit[pair] = true;
    }
  }
  out.push_back(bij);

  // Minimal ideals of the product are exactly the products M1 x M2, and its
  // idempotents in them the pairs of idempotents.
  auto ia = minimal_left_ideals(sa);
  auto ib = minimal_left_ideals(sb);
  auto ip = minimal_left_ideals(sp);
  Check ideals{"ideals_are_products", ip.size() == ia.size() * ib.size(), ""};
  if (!ideals.passed) {
    ideals.witness = std::to_string(ip.size()) + " product ideals vs " +
                     std::to_string(ia.size() * ib.size()) + " pairs";
  }
  Check idem{"idempotents_are_pairs", true, ""};
  for (std::size_t k = 0; k < ip.size() && ideals.passed; ++k) {
    std::set<std::pair<SIdx, SIdx>> pairs;
    for (SIdx f : ip[k].members) {
      pairs.emplace(p0.map[f], p1.map[f]);
    }
    bool matched = false;
    for (auto const& m1 : ia) {
      for (auto const& m2 : ib) {
        std::set<std::pair<SIdx, SIdx>> want;
        for (SIdx x : m1.members) {
          for (SIdx y : m2.members) {
            want.emplace(x, y);
          }
        }
        if (want == pairs && pairs.size() == ip[k].members.size()) {
          matched = true;
          std::set<std::pair<SIdx, SIdx>> idp;
          for (SIdx f : ip[k].idempotents) {
            idp.emplace(p0.map[f], p1.map[f]);
          }
          std::set<std::pair<SIdx, SIdx>> idw;
          for (SIdx x : m1.idempotents) {
            for (SIdx y : m2.idempotents) {
              idw.emplace(x, y);
            }
          }
          if (idp != idw) {
            idem = {idem.name, false, "product ideal " + std::to_string(k)};
          }
        }
      }
    }
    if (!matched) {
      ideals = {ideals.name, false, "product ideal " + std::to_string(k) + " is not M1 x M2"};
    }
  }
  out.push_back(ideals);
  out.push_back(idem);
  return out;
}

}  // namespace elliskit
