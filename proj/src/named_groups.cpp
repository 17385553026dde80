#include <array>
#include <map>

#include "elliskit/algebra.hpp"
#include "elliskit/error.hpp"

namespace elliskit {

namespace gf {

namespace {
// GF(4) = F2[w]/(w^2 + w + 1); element b1 b0 encodes b1 w + b0.
constexpr std::array<std::array<std::size_t, 4>, 4> kMul4{{
    {0, 0, 0, 0},
    {0, 1, 2, 3},
    {0, 2, 3, 1},
    {0, 3, 1, 2},
}};
}  // namespace

std::size_t add(std::size_t q, std::size_t a, std::size_t b) {
  return q == 4 ? (a ^ b) : (a + b) % q;
}

std::size_t mul(std::size_t q, std::size_t a, std::size_t b) {
  return q == 4 ? kMul4[a][b] : (a * b) % q;
}

}  // namespace gf

namespace {

std::size_t checked_pow(std::size_t base, std::size_t exp) {
  std::size_t r = 1;
  for (std::size_t i = 0; i < exp; ++i) {
    r *= base;
  }
  return r;
}

bool invertible(std::size_t q, std::size_t dim, std::vector<std::size_t> m) {
  // Gaussian elimination; over a field a nonzero pivot can always be
  // normalised, so it is enough to eliminate with multiples of the inverse.
  auto inv = [q](std::size_t a) {
    for (std::size_t b = 1; b < q; ++b) {
      if (gf::mul(q, a, b) == 1) {
        return b;
      }
    }
    return std::size_t{0};
  };
  auto neg = [q](std::size_t a) {
    for (std::size_t b = 0; b < q; ++b) {
      if (gf::add(q, a, b) == 0) {
        return b;
      }
    }
    return std::size_t{0};
  };
  for (std::size_t col = 0; col < dim; ++col) {
    std::size_t pivot = dim;
    for (std::size_t r = col; r < dim; ++r) {
      if (m[r * dim + col] != 0) {
        pivot = r;
        break;
      }
    }
    if (pivot == dim) {
      return false;
    }
    for (std::size_t c = 0; c < dim; ++c) {
      std::swap(m[col * dim + c], m[pivot * dim + c]);
    }
    std::size_t const pinv = inv(m[col * dim + col]);
    for (std::size_t r = col + 1; r < dim; ++r) {
      std::size_t const f = neg(gf::mul(q, m[r * dim + col], pinv));
      for (std::size_t c = 0; c < dim; ++c) {
        m[r * dim + c] = gf::add(q, m[r * dim + c], gf::mul(q, f, m[col * dim + c]));
      }
    }
  }
  return true;
}

std::size_t gl_order(std::size_t q, std::size_t dim) {
  std::size_t const qd = checked_pow(q, dim);
  std::size_t r = 1;
  for (std::size_t i = 0; i < dim; ++i) {
    r *= qd - checked_pow(q, i);
  }
  return r;
}

void check_cap(std::size_t order, std::string const& what, Caps const& caps) {
  if (order > caps.max_group_order) {
    throw Error(ErrorCode::UnsupportedParameters, what + " has order " + std::to_string(order) +
                                                      ", above the cap " +
                                                      std::to_string(caps.max_group_order));
  }
}

}  // namespace

std::size_t AffineCoordinates::vector_index(std::vector<std::size_t> const& v) const {
  std::size_t idx = 0;
  for (std::size_t c : v) {
    idx = idx * q + c;
  }
  return idx;
}

std::vector<std::size_t> AffineCoordinates::apply(std::size_t matrix_idx,
                                                  std::vector<std::size_t> const& v) const {
  auto const& m = matrices[matrix_idx];
  std::vector<std::size_t> out(dim, 0);
  for (std::size_t r = 0; r < dim; ++r) {
    for (std::size_t c = 0; c < dim; ++c) {
      out[r] = gf::add(q, out[r], gf::mul(q, m[r * dim + c], v[c]));
    }
  }
  return out;
}

std::size_t AffineCoordinates::identity_matrix() const {
  std::vector<std::size_t> id(dim * dim, 0);
  for (std::size_t i = 0; i < dim; ++i) {
    id[i * dim + i] = 1;
  }
  for (std::size_t i = 0; i < matrices.size(); ++i) {
    if (matrices[i] == id) {
      return i;
    }
  }
  return 0;
}

AffineCoordinates affine_coordinates(std::size_t q, std::size_t dim) {
  if ((q != 2 && q != 3 && q != 4) || dim == 0 || dim > 3) {
    throw Error(ErrorCode::UnsupportedParameters,
                "affine(" + std::to_string(q) + "," + std::to_string(dim) +
                    "): need q in {2,3,4} and 1 <= dim <= 3");
  }
  AffineCoordinates ac;
  ac.q = q;
  ac.dim = dim;
  std::size_t const nv = checked_pow(q, dim);
  for (std::size_t idx = 0; idx < nv; ++idx) {
    std::vector<std::size_t> v(dim);
    std::size_t t = idx;
    for (std::size_t i = dim; i-- > 0;) {
      v[i] = t % q;
      t /= q;
    }
    ac.vectors.push_back(std::move(v));
  }
  std::size_t const nm = checked_pow(q, dim * dim);
  for (std::size_t idx = 0; idx < nm; ++idx) {
    std::vector<std::size_t> m(dim * dim);
    std::size_t t = idx;
    for (std::size_t i = dim * dim; i-- > 0;) {
      m[i] = t % q;
      t /= q;
    }
    if (invertible(q, dim, m)) {
      ac.matrices.push_back(std::move(m));
    }
  }
  return ac;
}

FiniteGroup cyclic_group(std::size_t n, Caps const& caps) {
  if (n == 0) {
    throw Error(ErrorCode::UnsupportedParameters, "cyclic(0)");
  }
  check_cap(n, "cyclic(" + std::to_string(n) + ")", caps);
  Perm rot(n);
  for (std::size_t x = 0; x < n; ++x) {
    rot[x] = static_cast<std::uint32_t>((x + 1) % n);
  }
  return FiniteGroup::from_permutations(n, {rot}, caps);
}

FiniteGroup symmetric_group(std::size_t n, Caps const& caps) {
  if (n == 0) {
    throw Error(ErrorCode::UnsupportedParameters, "symmetric(0)");
  }
  std::size_t order = 1;
  for (std::size_t i = 2; i <= n; ++i) {
    order *= i;
    check_cap(order, "symmetric(" + std::to_string(n) + ")", caps);
  }
  Perm swap(n);
  Perm cycle(n);
  for (std::size_t x = 0; x < n; ++x) {
    swap[x] = static_cast<std::uint32_t>(x);
    cycle[x] = static_cast<std::uint32_t>((x + 1) % n);
  }
  if (n >= 2) {
    std::swap(swap[0], swap[1]);
  }
  return FiniteGroup::from_permutations(n, {swap, cycle}, caps);
}

FiniteGroup dihedral_group(std::size_t n, Caps const& caps) {
  if (n < 3) {
    throw Error(ErrorCode::UnsupportedParameters,
                "dihedral(" + std::to_string(n) + "): need n >= 3");
  }
  check_cap(2 * n, "dihedral(" + std::to_string(n) + ")", caps);
  Perm rot(n);
  Perm refl(n);
  for (std::size_t x = 0; x < n; ++x) {
    rot[x] = static_cast<std::uint32_t>((x + 1) % n);
    refl[x] = static_cast<std::uint32_t>((n - x) % n);
  }
  return FiniteGroup::from_permutations(n, {rot, refl}, caps);
}

FiniteGroup affine_group(std::size_t q, std::size_t dim, Caps const& caps) {
  if ((q != 2 && q != 3 && q != 4) || dim == 0 || dim > 3) {
    throw Error(ErrorCode::UnsupportedParameters,
                "affine(" + std::to_string(q) + "," + std::to_string(dim) +
                    "): need q in {2,3,4} and 1 <= dim <= 3");
  }
  std::string const what = "affine(" + std::to_string(q) + "," + std::to_string(dim) + ")";
  check_cap(checked_pow(q, dim) * gl_order(q, dim), what, caps);

  AffineCoordinates const ac = affine_coordinates(q, dim);
  std::size_t const nv = ac.vectors.size();
  std::size_t const nm = ac.matrices.size();

  std::map<std::vector<std::size_t>, std::size_t> mat_index;
  for (std::size_t i = 0; i < nm; ++i) {
    mat_index.emplace(ac.matrices[i], i);
  }
  std::vector<std::size_t> mat_mul(nm * nm);
  for (std::size_t a = 0; a < nm; ++a) {
    for (std::size_t b = 0; b < nm; ++b) {
      std::vector<std::size_t> p(dim * dim, 0);
      for (std::size_t r = 0; r < dim; ++r) {
        for (std::size_t c = 0; c < dim; ++c) {
          for (std::size_t k = 0; k < dim; ++k) {
            p[r * dim + c] = gf::add(q, p[r * dim + c],
                                     gf::mul(q, ac.matrices[a][r * dim + k], ac.matrices[b][k * dim + c]));
          }
        }
      }
      mat_mul[a * nm + b] = mat_index.at(p);
    }
  }
  std::vector<std::size_t> mat_vec(nm * nv);
  for (std::size_t a = 0; a < nm; ++a) {
    for (std::size_t v = 0; v < nv; ++v) {
      mat_vec[a * nv + v] = ac.vector_index(ac.apply(a, ac.vectors[v]));
    }
  }
  std::vector<std::size_t> vec_add(nv * nv);
  for (std::size_t a = 0; a < nv; ++a) {
    for (std::size_t b = 0; b < nv; ++b) {
      std::vector<std::size_t> s(dim);
      for (std::size_t i = 0; i < dim; ++i) {
        s[i] = gf::add(q, ac.vectors[a][i], ac.vectors[b][i]);
      }
      vec_add[a * nv + b] = ac.vector_index(s);
    }
  }

  std::size_t const n = nv * nm;
  std::vector<Elem> flat(n * n);
  for (std::size_t x = 0; x < n; ++x) {
    std::size_t const v = x / nm;
    std::size_t const m = x % nm;
    for (std::size_t y = 0; y < n; ++y) {
      std::size_t const w = y / nm;
      std::size_t const k = y % nm;
      flat[x * n + y] = static_cast<Elem>(vec_add[v * nv + mat_vec[m * nv + w]] * nm + mat_mul[m * nm + k]);
    }
  }
  FiniteGroup g = table_group_unchecked(n, std::move(flat));

  std::vector<std::uint32_t> images(n * nv);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t w = 0; w < nv; ++w) {
      images[x * nv + w] = static_cast<std::uint32_t>(vec_add[(x / nm) * nv + mat_vec[(x % nm) * nv + w]]);
    }
  }
  g.set_permutation_rep(nv, std::move(images));
  return g;
}

FiniteGroup quaternion_group() {
  // Index 2u + s encodes (-1)^s times unit u in {1, i, j, k}.
  static constexpr std::array<std::array<int, 4>, 4> kUnit{{
      {0, 1, 2, 3},
      {1, 0, 3, 2},
      {2, 3, 0, 1},
      {3, 2, 1, 0},
  }};
  static constexpr std::array<std::array<int, 4>, 4> kSign{{
      {0, 0, 0, 0},
      {0, 1, 0, 1},
      {0, 1, 1, 0},
      {0, 0, 1, 1},
  }};
  std::vector<Elem> flat(64);
  for (Elem a = 0; a < 8; ++a) {
    for (Elem b = 0; b < 8; ++b) {
      int const u = kUnit[a / 2][b / 2];
      int const s = (static_cast<int>(a % 2) + static_cast<int>(b % 2) + kSign[a / 2][b / 2]) % 2;
      flat[a * 8 + b] = static_cast<Elem>(2 * u + s);
    }
  }
  FiniteGroup g = table_group_unchecked(8, std::move(flat));
  g.set_generators({2, 4});
  std::vector<std::uint32_t> images(64);
  for (Elem a = 0; a < 8; ++a) {
    for (Elem x = 0; x < 8; ++x) {
      images[a * 8 + x] = g.mul(a, x);
    }
  }
  g.set_permutation_rep(8, std::move(images));
  return g;
}

FiniteGroup named_group(NamedGroupSpec const& spec, Caps const& caps) {
  if (spec.name == "cyclic") {
    return cyclic_group(spec.n, caps);
  }
  if (spec.name == "symmetric") {
    return symmetric_group(spec.n, caps);
  }
  if (spec.name == "dihedral") {
    return dihedral_group(spec.n, caps);
  }
  if (spec.name == "affine") {
    return affine_group(spec.q, spec.dim, caps);
  }
  if (spec.name == "quaternion") {
    return quaternion_group();
  }
  throw Error(ErrorCode::UnsupportedParameters, "unknown named group '" + spec.name + "'");
}

}  // namespace elliskit
