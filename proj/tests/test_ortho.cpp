/**
 * @file test_ortho.cpp
 * @brief Orthogonal groups, parabolic data, orbits, distinguished elements and subgroup identities.
 */
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "orthochar/ortho.hpp"

using namespace orthochar;

namespace {

Vec random_vec(const OrthoContext& ctx, unsigned seed) {
  Vec v(ctx.n() - 2);
  for (auto& x : v) {
    seed = seed * 1103515245u + 12345u;
    x = static_cast<uint8_t>((seed >> 16) % ctx.q());
  }
  return v;
}

}  // namespace

TEST_CASE("context constants") {
  CHECK(OrthoContext::get(5, 2)->nu_prime() == 1);
  CHECK(OrthoContext::get(5, 4)->nu_prime() == 1);
  const auto& f3 = *field_of_order(3);
  uint8_t np = OrthoContext::get(5, 3)->nu_prime();
  CHECK((np == 1 || !f3.is_square(np)));
  CHECK(OrthoContext::get(5, 3)->nu_dprime() == f3.smallest_nonsquare());
  CHECK(OrthoContext::get(5, 2)->nu_dprime() == 1);
  for (auto [n, q] : std::vector<std::pair<int, int>>{{5, 2}, {5, 3}, {7, 2}}) CHECK(all_ok(check_context(*OrthoContext::get(n, q))));
}

TEST_CASE("unipotent radical elements") {
  auto ctx = OrthoContext::get(5, 3);
  const Field& f = ctx->field();
  CHECK(ctx->u(Vec(3, 0)) == mat_identity(5));
  for (unsigned s = 0; s < 20; ++s) {
    Vec v = random_vec(*ctx, s), w = random_vec(*ctx, s + 100), vw(3);
    for (int i = 0; i < 3; ++i) vw[i] = f.add(v[i], w[i]);
    CHECK(mat_mul(f, ctx->u(v), ctx->u(w)) == ctx->u(vw));
    CHECK(is_isometry(ctx->form(), ctx->u(v)));
  }
}

TEST_CASE("Levi action on U") {
  auto ctx = OrthoContext::get(5, 3);
  const Field& f = ctx->field();
  const FiniteMatrixGroup& lp = ctx->Lprime();
  for (unsigned s = 0; s < 10; ++s) {
    const Mat& x = lp.element(s * 7 % lp.order());
    const Mat xm = ctx->mid(x);
    const uint8_t a = static_cast<uint8_t>(1 + s % 2);
    const Mat sx = ctx->s_elem(xm, a);
    Vec v = random_vec(*ctx, s);
    Vec axv = mat_apply(f, xm, v);
    for (auto& c : axv) c = f.mul(a, c);
    CHECK(mat_mul(f, mat_mul(f, sx, ctx->u(v)), mat_inv(f, sx)) == ctx->u(axv));
  }
}

TEST_CASE("Weyl elements") {
  auto ctx = OrthoContext::get(5, 3);
  CHECK(ctx->G().contains(ctx->s()));
  CHECK(ctx->G().contains(ctx->t()));
  const Mat s = ctx->s();
  CHECK(s(0, 1) != 0);
  CHECK(s(1, 0) != 0);
  CHECK(s(0, 0) == 0);
  CHECK(s(2, 2) == 1);
  auto c7 = OrthoContext::get(7, 2);
  CHECK(c7->G().contains(c7->r()));
}

TEST_CASE("linear characters of U") {
  auto ctx = OrthoContext::get(5, 3);
  const int m = ctx->m();
  Vec e0(3, 0), eprime(3, 0);
  e0[m - 1] = 1;
  eprime[2 * m - 2] = 1;
  const Cyclotomic z3 = Cyclotomic::zeta(3);
  CHECK(ctx->lambda(0, eprime) == z3);
  CHECK(ctx->lambda(1, e0) == z3);
  for (int eps : {0, 1, -1}) CHECK(ctx->lambda(eps, Vec(3, 0)) == Cyclotomic(1));
}

TEST_CASE("orders") {
  CHECK(OrthoContext::get(5, 3)->Ptilde().order() == 6);
  CHECK(OrthoContext::get(5, 3)->Lpm(-1).order() == 8);
  CHECK(OrthoContext::get(5, 2)->P().order() == 48);
  for (int q : {2, 3, 4, 5}) {
    CHECK(all_ok(check_orders(*OrthoContext::get(3, q))));
    CHECK(all_ok(check_orders(*OrthoContext::get(5, q))));
  }
}

TEST_CASE("four orbits on Irr(U)") {
  for (auto [n, q] : std::vector<std::pair<int, int>>{{5, 2}, {5, 3}, {5, 4}, {5, 5}, {7, 2}}) {
    auto ctx = OrthoContext::get(n, q);
    OrbitData d = ctx->orbit_structure();
    CHECK(d.orbit_count == 4);
    uint64_t total = 0;
    for (auto s : d.sizes) total += s;
    uint64_t qn = 1;
    for (int i = 0; i < n - 2; ++i) qn *= q;
    CHECK(total == qn);
    CHECK(all_ok(check_orbits(*ctx)));
  }
  CHECK(all_ok(check_inertia(*OrthoContext::get(5, 3))));
}

TEST_CASE("centralizers of z_0, z_1, z_2") {
  auto ctx = OrthoContext::get(5, 3);
  const FiniteMatrixGroup& p = ctx->P();
  std::array<uint64_t, 3> expect{162, 108, 216};
  uint64_t total = 1;
  for (int j = 0; j < 3; ++j) {
    const auto& c = p.classes()[p.class_of(ctx->z(j))];
    CHECK(c.centralizer == expect[j]);
    total += c.size;
  }
  CHECK(total == 27);
  CHECK(all_ok(check_z_classes(*ctx)));
  CHECK(all_ok(check_z_classes(*OrthoContext::get(5, 2))));
}

TEST_CASE("subgroup identities") {
  for (int q : {2, 3}) {
    auto ctx = OrthoContext::get(5, q);
    CHECK(ctx->U().order() / ctx->R().order() == static_cast<uint64_t>(q));
    CHECK(all_ok(check_double_cosets(*ctx)));
    CHECK(all_ok(check_parabolic_intersections(*ctx)));
  }
  CHECK(all_ok(check_r_intersections(*OrthoContext::get(7, 2))));
}

TEST_CASE("even characteristic isomorphism with Sp") {
  CHECK(all_ok(check_sp_isomorphism(*OrthoContext::get(5, 2))));
}

TEST_CASE("context JSON") {
  nlohmann::json j = OrthoContext::get(5, 2)->dump();
  CHECK(j["n"] == 5);
  CHECK(j.contains("b_n"));
  CHECK(j.contains("z2"));
}
