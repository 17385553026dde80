#include <algorithm>
#include <map>
#include <sstream>

#include "elliskit/algebra.hpp"
#include "elliskit/error.hpp"

namespace elliskit {

namespace {

std::map<std::size_t, std::size_t> order_profile(FiniteGroup const& g) {
  std::map<std::size_t, std::size_t> prof;
  for (Elem x = 0; x < g.order(); ++x) {
    ++prof[g.element_order(x)];
  }
  return prof;
}

std::string profile_text(std::map<std::size_t, std::size_t> const& p) {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (auto [ord, cnt] : p) {
    os << (first ? "" : ",") << ord << ':' << cnt;
    first = false;
  }
  os << '}';
  return os.str();
}

// Small generating set, preferring elements of large order.
std::vector<Elem> search_generators(FiniteGroup const& g) {
  std::vector<Elem> elems(g.order());
  for (Elem x = 0; x < g.order(); ++x) {
    elems[x] = x;
  }
  std::vector<std::size_t> ord(g.order());
  for (Elem x = 0; x < g.order(); ++x) {
    ord[x] = g.element_order(x);
  }
  std::stable_sort(elems.begin(), elems.end(), [&](Elem a, Elem b) { return ord[a] > ord[b]; });
  std::vector<Elem> gens;
  Subgroup cur = trivial_subgroup(g);
  for (Elem x : elems) {
    if (cur.order() == g.order()) {
      break;
    }
    if (!cur.contains(x)) {
      gens.push_back(x);
      cur = subgroup_generated(g, gens);
    }
  }
  return gens;
}

class IsoSearch {
 public:
  IsoSearch(FiniteGroup const& a, FiniteGroup const& b)
      : a_(a), b_(b), gens_(search_generators(a)), ord_b_(b.order()) {
    for (Elem y = 0; y < b.order(); ++y) {
      ord_b_[y] = b.element_order(y);
    }
  }

  bool run() { return assign(0); }
  std::vector<Elem> const& map() const { return map_; }
  std::size_t attempts() const { return attempts_; }

 private:
  // Extends the partial assignment gens_[0..k) to a map on the subgroup they
  // generate; fails when two words for the same element get different images.
  bool consistent(std::size_t k) {
    std::size_t const none = static_cast<std::size_t>(-1);
    std::vector<std::size_t> img(a_.order(), none);
    std::vector<Elem> queue{a_.identity()};
    img[a_.identity()] = b_.identity();
    std::vector<bool> used(b_.order(), false);
    used[b_.identity()] = true;
    for (std::size_t i = 0; i < queue.size(); ++i) {
      Elem x = queue[i];
      for (std::size_t s = 0; s < k; ++s) {
        Elem y = a_.mul(x, gens_[s]);
        Elem fy = b_.mul(static_cast<Elem>(img[x]), images_[s]);
        if (img[y] == none) {
          if (used[fy]) {
            return false;  // not injective
          }
          used[fy] = true;
          img[y] = fy;
          queue.push_back(y);
        } else if (img[y] != fy) {
          return false;
        }
      }
    }
    if (k == gens_.size()) {
      map_.assign(a_.order(), 0);
      for (Elem x = 0; x < a_.order(); ++x) {
        map_[x] = static_cast<Elem>(img[x]);
      }
    }
    return true;
  }

  bool assign(std::size_t k) {
    if (k == gens_.size()) {
      return true;
    }
    std::size_t const want = a_.element_order(gens_[k]);
    for (Elem y = 0; y < b_.order(); ++y) {
      if (ord_b_[y] != want) {
        continue;
      }
      ++attempts_;
      images_.resize(k + 1);
      images_[k] = y;
      if (consistent(k + 1) && assign(k + 1)) {
        return true;
      }
    }
    return false;
  }

  FiniteGroup const& a_;
  FiniteGroup const& b_;
  std::vector<Elem> gens_;
  std::vector<std::size_t> ord_b_;
  std::vector<Elem> images_;
  std::vector<Elem> map_;
  std::size_t attempts_ = 0;
};

}  // namespace

IsomorphismVerdict are_isomorphic(FiniteGroup const& a, FiniteGroup const& b, Caps const& caps) {
  if (a.order() > caps.isomorphism_order || b.order() > caps.isomorphism_order) {
    throw Error(ErrorCode::GroupTooLarge, "isomorphism test limited to order " +
                                              std::to_string(caps.isomorphism_order));
  }
  IsomorphismVerdict v;
  if (a.order() != b.order()) {
    v.certificate = "orders differ: " + std::to_string(a.order()) + " vs " + std::to_string(b.order());
    return v;
  }
  auto pa = order_profile(a);
  auto pb = order_profile(b);
  if (pa != pb) {
    v.certificate = "element-order multisets differ: " + profile_text(pa) + " vs " + profile_text(pb);
    return v;
  }
  IsoSearch search(a, b);
  v.isomorphic = search.run();
  if (v.isomorphic) {
    v.map = search.map();
    v.certificate = "explicit isomorphism found after " + std::to_string(search.attempts()) +
                    " generator assignments";
  } else {
    v.certificate = "exhausted " + std::to_string(search.attempts()) +
                    " generator assignments with matching element orders";
  }
  return v;
}

}  // namespace elliskit
