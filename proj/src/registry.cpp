#include "fqsum/identities.hpp"

#include <algorithm>

namespace fqsum {

namespace {

ParamSpec ch(std::string name) { return {std::move(name), ParamKind::Character, ElementDomain::Full}; }
ParamSpec el(std::string name, ElementDomain domain = ElementDomain::Full) {
  return {std::move(name), ParamKind::Element, domain};
}

// eps(x): 1 for x != 0, and 0 at 0.
CharValue eps(const FieldElement& x) { return trivial_character(x.field())(x); }

int delta(const FieldElement& x) { return delta_elem(x); }

BigInt qm1(const Args& a) { return BigInt(a.ctx().order()); }

CycInt value(const Args& a, CharValue v) {
  if (v.is_zero()) return a.ctx().zero();
  return a.ctx().integer(1).mul_root(v.exponent());
}

// pref * f(), skipping f when pref vanishes. Arguments such as x/(x-1) are
// only formed behind a prefactor that is zero exactly where they are undefined.
template <typename F>
CycInt guarded(const Args& a, CharValue pref, F&& f) {
  if (pref.is_zero()) return a.ctx().zero();
  return pref * f();
}

CycInt signed_term(bool flip, CycInt v) { return flip ? v : -v; }

struct Builder {
  std::vector<IdentityCase> cases;

  void add(std::string id, std::string statement, std::vector<ParamSpec> params, SideFn lhs, SideFn rhs,
           std::string mutation, unsigned clearing = 0, DivisibleSide divisible = DivisibleSide::None) {
    IdentityCase c;
    c.id = std::move(id);
    c.statement = std::move(statement);
    c.params = std::move(params);
    c.lhs = std::move(lhs);
    c.rhs = std::move(rhs);
    c.mutation = std::move(mutation);
    c.clearing_power = clearing;
    c.divisible = divisible;
    cases.push_back(std::move(c));
  }
};

// Point-sum F1 and 2F1 with the parameters in their printed order.
CycInt F1(const Args& a, const Character& A, const Character& B, const Character& Bp, const Character& C,
          const FieldElement& x, const FieldElement& y) {
  return a.ctx().appell(A, B, Bp, C, x, y);
}

CycInt F21(const Args& a, const Character& A, const Character& B, const Character& C, const FieldElement& x) {
  return a.ctx().f21(A, B, C, x);
}

const CycInt& Bn(const Args& a, const Character& A, const Character& B) { return a.ctx().binom(A, B); }

void add_foundation(Builder& b) {
  b.add("thm1.1", "(q-1) 2F1[A,B;C;x] = sum_chi [A chi|chi][B chi|C chi] chi(x)",
        {ch("A"), ch("B"), ch("C"), el("x")},
        [](const Args& a) {
          auto [A, B, C] = a.chars<3>();
          auto [x] = a.elems<1>();
          return qm1(a) * F21(a, A, B, C, x);
        },
        [](const Args& a) {
          auto [A, B, C] = a.chars<3>();
          auto [x] = a.elems<1>();
          return a.mutated() ? a.ctx().f21_character_total(A, C, B, x) : a.ctx().f21_character_total(A, B, C, x);
        },
        "swap B and C inside the character sum", 1, DivisibleSide::Rhs);

  b.add("thm1.2", "2F1[A,B;C;1] = A(-1) [B|conj(A)C]", {ch("A"), ch("B"), ch("C")},
        [](const Args& a) {
          auto [A, B, C] = a.chars<3>();
          return F21(a, A, B, C, a.ctx().field().one());
        },
        [](const Args& a) {
          auto [A, B, C] = a.chars<3>();
          const Character lower = a.mutated() ? A * C : A.conj() * C;
          return A.at_minus_one() * Bn(a, B, lower);
        },
        "conj(A)C -> AC in the binomial");

  b.add("thm1.3",
        "(q-1)^2 F1(A;B,B';C;x,y) = sum_{chi,lambda} [A chi lambda|C chi lambda][B chi|chi][B' lambda|lambda] "
        "chi(x) lambda(y)",
        {ch("A"), ch("B"), ch("B'"), ch("C"), el("x"), el("y")},
        [](const Args& a) {
          auto [A, B, Bp, C] = a.chars<4>();
          auto [x, y] = a.elems<2>();
          return qm1(a) * qm1(a) * F1(a, A, B, Bp, C, x, y);
        },
        [](const Args& a) {
          auto [A, B, Bp, C] = a.chars<4>();
          auto [x, y] = a.elems<2>();
          return a.mutated() ? a.ctx().appell_character_total(A, B, Bp, C, y, x)
                             : a.ctx().appell_character_total(A, B, Bp, C, x, y);
        },
        "swap x and y inside the double character sum", 2, DivisibleSide::Rhs);

  b.add("cor1.1-sym", "F1(A;B,B';C;x,y) = F1(A;B',B;C;y,x)",
        {ch("A"), ch("B"), ch("B'"), ch("C"), el("x"), el("y")},
        [](const Args& a) {
          auto [A, B, Bp, C] = a.chars<4>();
          auto [x, y] = a.elems<2>();
          return F1(a, A, B, Bp, C, x, y);
        },
        [](const Args& a) {
          auto [A, B, Bp, C] = a.chars<4>();
          auto [x, y] = a.elems<2>();
          return a.mutated() ? F1(a, A, B, Bp, C, y, x) : F1(a, A, Bp, B, C, y, x);
        },
        "keep B, B' in place while swapping x, y");

  b.add("cor1.1-diag", "F1(A;B,B';C;x,x) = 2F1[BB',A;C;x]", {ch("A"), ch("B"), ch("B'"), ch("C"), el("x")},
        [](const Args& a) {
          auto [A, B, Bp, C] = a.chars<4>();
          auto [x] = a.elems<1>();
          return F1(a, A, B, Bp, C, x, x);
        },
        [](const Args& a) {
          auto [A, B, Bp, C] = a.chars<4>();
          auto [x] = a.elems<1>();
          return F21(a, a.mutated() ? B * Bp.conj() : B * Bp, A, C, x);
        },
        "BB' -> B conj(B')");

  b.add("cor1.1-y1", "F1(A;B,B';C;x,1) = B'(-1) 2F1[B,A;conj(B')C;x]",
        {ch("A"), ch("B"), ch("B'"), ch("C"), el("x")},
        [](const Args& a) {
          auto [A, B, Bp, C] = a.chars<4>();
          auto [x] = a.elems<1>();
          return F1(a, A, B, Bp, C, x, a.ctx().field().one());
        },
        [](const Args& a) {
          auto [A, B, Bp, C] = a.chars<4>();
          auto [x] = a.elems<1>();
          return Bp.at_minus_one() * F21(a, B, A, a.mutated() ? Bp * C : Bp.conj() * C, x);
        },
        "conj(B')C -> B'C");

  b.add("prop2.1-a", "[A|B] = [A|A conj(B)]", {ch("A"), ch("B")},
        [](const Args& a) {
          auto [A, B] = a.chars<2>();
          return Bn(a, A, B);
        },
        [](const Args& a) {
          auto [A, B] = a.chars<2>();
          return Bn(a, A, a.mutated() ? A.conj() * B : A * B.conj());
        },
        "A conj(B) -> conj(A) B");

  b.add("prop2.1-b",
        "[C|A][A|B] = [C|B][C conj(B)|A conj(B)] - (q-1)(B(-1) delta(A) - AB(-1) delta(B conj(C)))",
        {ch("A"), ch("B"), ch("C")},
        [](const Args& a) {
          auto [A, B, C] = a.chars<3>();
          return Bn(a, C, A) * Bn(a, A, B);
        },
        [](const Args& a) {
          auto [A, B, C] = a.chars<3>();
          const CycInt main = Bn(a, C, B) * Bn(a, C * B.conj(), A * B.conj());
          CycInt corr = delta_char(A) * value(a, B.at_minus_one()) -
                        delta_char(B * C.conj()) * value(a, (A * B).at_minus_one());
          return main + signed_term(a.mutated(), qm1(a) * corr);
        },
        "sign of the (q-1) correction");

  b.add("prop2.2", "(q-1) conj(A)(1-x) = (q-1) delta(x) + sum_chi [A chi|chi] chi(x)", {ch("A"), el("x")},
        [](const Args& a) {
          auto [A] = a.chars<1>();
          auto [x] = a.elems<1>();
          return qm1(a) * value(a, A.conj()(one_minus(x)));
        },
        [](const Args& a) {
          auto [A] = a.chars<1>();
          auto [x] = a.elems<1>();
          const SumContext& ctx = a.ctx();
          CycInt sum = ctx.zero();
          for (std::uint32_t e = 0; e < ctx.order(); ++e) {
            const Character chi = ctx.character(e);
            sum += chi(x) * Bn(a, A * chi, chi);
          }
          const int d = a.mutated() ? delta(one_minus(x)) : delta(x);
          return sum + ctx.integer(qm1(a) * d);
        },
        "delta(x) -> delta(1-x)", 1);

  b.add("prop2.3-a", "sum_chi chi(t) = (q-1) delta(t-1)", {el("t")},
        [](const Args& a) {
          auto [t] = a.elems<1>();
          const SumContext& ctx = a.ctx();
          CycInt sum = ctx.zero();
          for (std::uint32_t e = 0; e < ctx.order(); ++e) sum += value(a, ctx.character(e)(t));
          return sum;
        },
        [](const Args& a) {
          auto [t] = a.elems<1>();
          const FieldElement one = a.ctx().field().one();
          return a.ctx().integer(qm1(a) * delta(a.mutated() ? t : t - one));
        },
        "delta(t-1) -> delta(t)");

  b.add("prop2.3-b", "sum_t chi(t) = (q-1) delta(chi)", {ch("chi")},
        [](const Args& a) {
          auto [chi] = a.chars<1>();
          const SumContext& ctx = a.ctx();
          CycInt sum = ctx.zero();
          for (const FieldElement& t : ctx.field().enumerate()) sum += value(a, chi(t));
          return sum;
        },
        [](const Args& a) {
          auto [chi] = a.chars<1>();
          return a.ctx().integer(qm1(a) * delta_char(a.mutated() ? chi * chi : chi));
        },
        "delta(chi) -> delta(chi^2)");
}

void add_reductions(Builder& b) {
  b.add("thm3.1-a",
        "F1(A;B,eps;C;x,y) = eps(y) 2F1[B,A;C;x] - eps(x) conj(A)C(1-y) B conj(C)(y) conj(B)(y-x)",
        {ch("A"), ch("B"), ch("C"), el("x"), el("y")},
        [](const Args& a) {
          auto [A, B, C] = a.chars<3>();
          auto [x, y] = a.elems<2>();
          return F1(a, A, B, trivial_character(a.ctx().field()), C, x, y);
        },
        [](const Args& a) {
          auto [A, B, C] = a.chars<3>();
          auto [x, y] = a.elems<2>();
          const CycInt first = eps(y) * F21(a, B, A, C, x);
          const CharValue corr = eps(x) * (A.conj() * C)(one_minus(y)) * (B * C.conj())(y) * B.conj()(y - x);
          return first + signed_term(a.mutated(), value(a, corr));
        },
        "sign of the second term");

  b.add("thm3.1-b",
        "F1(A;eps,B';C;x,y) = eps(x) 2F1[B',A;C;y] - eps(y) conj(A)C(1-x) B' conj(C)(x) conj(B')(x-y)",
        {ch("A"), ch("B'"), ch("C"), el("x"), el("y")},
        [](const Args& a) {
          auto [A, Bp, C] = a.chars<3>();
          auto [x, y] = a.elems<2>();
          return F1(a, A, trivial_character(a.ctx().field()), Bp, C, x, y);
        },
        [](const Args& a) {
          auto [A, Bp, C] = a.chars<3>();
          auto [x, y] = a.elems<2>();
          const CycInt first = eps(x) * F21(a, Bp, A, C, y);
          const CharValue corr = eps(y) * (A.conj() * C)(one_minus(x)) * (Bp * C.conj())(x) * Bp.conj()(x - y);
          return first + signed_term(a.mutated(), value(a, corr));
        },
        "sign of the second term");
}

void add_transformations(Builder& b) {
  const std::vector<ParamSpec> full = {ch("A"), ch("B"), ch("B'"), ch("C"), el("x"), el("y")};

  SideFn eps_lhs = [](const Args& a) {
    auto [A, B, Bp, C] = a.chars<4>();
    auto [x, y] = a.elems<2>();
    return eps(x - y) * F1(a, A, B, Bp, C, x, y);
  };
  SideFn plain_lhs = [](const Args& a) {
    auto [A, B, Bp, C] = a.chars<4>();
    auto [x, y] = a.elems<2>();
    return F1(a, A, B, Bp, C, x, y);
  };

  b.add("thm3.3-a", "F1(A;B,B';C;x,y) = C(-1) conj(B)(1-x) conj(B')(1-y) F1(conj(A)C;B,B';C;x/(x-1),y/(y-1))",
        full, plain_lhs,
        [](const Args& a) {
          auto [A, B, Bp, C] = a.chars<4>();
          auto [x, y] = a.elems<2>();
          const FieldElement one = a.ctx().field().one();
          const CharValue pref = C.at_minus_one() * B.conj()(one_minus(x)) * Bp.conj()(one_minus(y));
          return guarded(a, pref, [&] {
            const Character top = a.mutated() ? A : A.conj() * C;
            return F1(a, top, B, Bp, C, x / (x - one), y / (y - one));
          });
        },
        "conj(A)C -> A in the first slot");

  b.add("thm3.3-b",
        "eps(x-y) F1(A;B,B';C;x,y) = eps(y) conj(A)(1-x) F1(A;conj(BB')C,B';C;x/(x-1),(y-x)/(1-x))", full,
        eps_lhs,
        [](const Args& a) {
          auto [A, B, Bp, C] = a.chars<4>();
          auto [x, y] = a.elems<2>();
          const FieldElement one = a.ctx().field().one();
          const CharValue pref = eps(y) * A.conj()(one_minus(x));
          return guarded(a, pref, [&] {
            const FieldElement second = (a.mutated() ? x - y : y - x) / one_minus(x);
            return F1(a, A, (B * Bp).conj() * C, Bp, C, x / (x - one), second);
          });
        },
        "(y-x)/(1-x) -> (x-y)/(1-x)");

  b.add("thm3.3-c",
        "eps(x-y) F1(A;B,B';C;x,y) = eps(y) C(-1) conj(AB)C(1-x) conj(B')(1-y) "
        "F1(conj(A)C;conj(BB')C,B';C;x,(x-y)/(1-y))",
        full, eps_lhs,
        [](const Args& a) {
          auto [A, B, Bp, C] = a.chars<4>();
          auto [x, y] = a.elems<2>();
          const Character last = a.mutated() ? Bp : Bp.conj();
          const CharValue pref =
              eps(y) * C.at_minus_one() * ((A * B).conj() * C)(one_minus(x)) * last(one_minus(y));
          return guarded(a, pref, [&] {
            return F1(a, A.conj() * C, (B * Bp).conj() * C, Bp, C, x, (x - y) / one_minus(y));
          });
        },
        "conj(B')(1-y) -> B'(1-y)");

  b.add("thm3.4-a",
        "eps(x-y) F1(A;B,B';C;x,y) = eps(x) conj(A)(1-y) F1(A;B,conj(BB')C;C;(x-y)/(1-y),y/(y-1))", full,
        eps_lhs,
        [](const Args& a) {
          auto [A, B, Bp, C] = a.chars<4>();
          auto [x, y] = a.elems<2>();
          const FieldElement one = a.ctx().field().one();
          const CharValue pref = eps(x) * (a.mutated() ? A : A.conj())(one_minus(y));
          return guarded(a, pref, [&] {
            return F1(a, A, B, (B * Bp).conj() * C, C, (x - y) / one_minus(y), y / (y - one));
          });
        },
        "conj(A)(1-y) -> A(1-y)");

  b.add("thm3.4-b",
        "eps(x-y) F1(A;B,B';C;x,y) = eps(x) C(-1) conj(B)(1-x) conj(AB')C(1-y) "
        "F1(conj(A)C;B,conj(BB')C;C;(y-x)/(1-x),y)",
        full, eps_lhs,
        [](const Args& a) {
          auto [A, B, Bp, C] = a.chars<4>();
          auto [x, y] = a.elems<2>();
          const CharValue pref =
              eps(x) * C.at_minus_one() * B.conj()(one_minus(x)) * ((A * Bp).conj() * C)(one_minus(y));
          return guarded(a, pref, [&] {
            const FieldElement first = (y - x) / one_minus(x);
            return a.mutated() ? F1(a, A.conj() * C, B, (B * Bp).conj() * C, C, y, first)
                               : F1(a, A.conj() * C, B, (B * Bp).conj() * C, C, first, y);
          });
        },
        "swap the two arguments of the transformed F1");

  b.add("cor3.1", "2F1[B,A;C;x] = C(-1) conj(B)(1-x) 2F1[B,conj(A)C;C;x/(x-1)]  (x != 1)",
        {ch("A"), ch("B"), ch("C"), el("x", ElementDomain::NotOne)},
        [](const Args& a) {
          auto [A, B, C] = a.chars<3>();
          auto [x] = a.elems<1>();
          return F21(a, B, A, C, x);
        },
        [](const Args& a) {
          auto [A, B, C] = a.chars<3>();
          auto [x] = a.elems<1>();
          const FieldElement one = a.ctx().field().one();
          const CharValue pref = C.at_minus_one() * (a.mutated() ? B : B.conj())(one_minus(x));
          return guarded(a, pref, [&] { return F21(a, B, A.conj() * C, C, x / (x - one)); });
        },
        "conj(B)(1-x) -> B(1-x)");

  b.add("cor3.1-greene-extended",
        "2F1[A,B;C;x] = C(-1) conj(A)(1-x) 2F1[A,C conj(B);C;x/(x-1)] + A(-1) [B|conj(A)C] delta(1-x)",
        {ch("A"), ch("B"), ch("C"), el("x")},
        [](const Args& a) {
          auto [A, B, C] = a.chars<3>();
          auto [x] = a.elems<1>();
          return F21(a, A, B, C, x);
        },
        [](const Args& a) {
          auto [A, B, C] = a.chars<3>();
          auto [x] = a.elems<1>();
          const FieldElement one = a.ctx().field().one();
          const CharValue pref = C.at_minus_one() * A.conj()(one_minus(x));
          CycInt out = guarded(a, pref, [&] { return F21(a, A, C * B.conj(), C, x / (x - one)); });
          const int d = a.mutated() ? delta(x) : delta(one_minus(x));
          if (d != 0) out += A.at_minus_one() * Bn(a, B, A.conj() * C);
          return out;
        },
        "delta(1-x) -> delta(x)");

  const std::vector<ParamSpec> cor32 = {ch("A"), ch("B"), ch("B'"), el("x"), el("y")};
  SideFn cor32_lhs = [](const Args& a) {
    auto [A, B, Bp] = a.chars<3>();
    auto [x, y] = a.elems<2>();
    return eps(x - y) * F1(a, A, B, Bp, B * Bp, x, y);
  };

  b.add("cor3.2-a",
        "eps(x-y) F1(A;B,B';BB';x,y) = eps(xy) conj(A)(1-x) 2F1[B',A;BB';(y-x)/(1-x)] - eps(y-x) "
        "conj(B)(-x) conj(B')(-y)",
        cor32, cor32_lhs,
        [](const Args& a) {
          auto [A, B, Bp] = a.chars<3>();
          auto [x, y] = a.elems<2>();
          const CharValue pref = eps(x * y) * A.conj()(one_minus(x));
          const CycInt first = guarded(a, pref, [&] { return F21(a, Bp, A, B * Bp, (y - x) / one_minus(x)); });
          const CharValue corr = eps(y - x) * B.conj()(-x) * Bp.conj()(-y);
          return first + signed_term(a.mutated(), value(a, corr));
        },
        "sign of the second term");

  b.add("cor3.2-b",
        "eps(x-y) F1(A;B,B';BB';x,y) = eps(xy) BB'(-1) conj(A)B'(1-x) conj(B')(1-y) "
        "2F1[B',conj(A)BB';BB';(x-y)/(1-y)] - eps(x-y) conj(B)(-x) conj(B')(-y)",
        cor32, cor32_lhs,
        [](const Args& a) {
          auto [A, B, Bp] = a.chars<3>();
          auto [x, y] = a.elems<2>();
          const CharValue pref = eps(x * y) * (B * Bp).at_minus_one() * (A.conj() * Bp)(one_minus(x)) *
                                 Bp.conj()(one_minus(y));
          const CycInt first =
              guarded(a, pref, [&] { return F21(a, Bp, A.conj() * B * Bp, B * Bp, (x - y) / one_minus(y)); });
          const CharValue corr = eps(x - y) * B.conj()(-x) * Bp.conj()(-y);
          return first + signed_term(a.mutated(), value(a, corr));
        },
        "sign of the second term");

  b.add("thm3.7", "F1(A;B,B';C;x,y) = BB'(-1) F1(A;B,B';ABB' conj(C);1-x,1-y)  (x, y not in {0,1})",
        {ch("A"), ch("B"), ch("B'"), ch("C"), el("x", ElementDomain::NotZeroOne), el("y", ElementDomain::NotZeroOne)},
        plain_lhs,
        [](const Args& a) {
          auto [A, B, Bp, C] = a.chars<4>();
          auto [x, y] = a.elems<2>();
          const Character lower = A * B * Bp * C.conj();
          return (B * Bp).at_minus_one() * (a.mutated() ? F1(a, A, B, Bp, lower, one_minus(y), one_minus(x))
                                                        : F1(a, A, B, Bp, lower, one_minus(x), one_minus(y)));
        },
        "swap 1-x and 1-y");

  b.add("cor3.3",
        "2F1[B,A;C;x] = B(-1) 2F1[B,A;AB conj(C);1-x] + B(-1) [A|conj(B)C] delta(1-x) - [A|C] delta(x)",
        {ch("A"), ch("B"), ch("C"), el("x")},
        [](const Args& a) {
          auto [A, B, C] = a.chars<3>();
          auto [x] = a.elems<1>();
          return F21(a, B, A, C, x);
        },
        [](const Args& a) {
          auto [A, B, C] = a.chars<3>();
          auto [x] = a.elems<1>();
          CycInt out = B.at_minus_one() * F21(a, B, A, A * B * C.conj(), one_minus(x));
          if (delta(one_minus(x)) != 0) out += B.at_minus_one() * Bn(a, A, B.conj() * C);
          if (delta(x) != 0) out += signed_term(a.mutated(), Bn(a, A, C));
          return out;
        },
        "sign of the [A|C] delta(x) term");
}

// The generating functions. `restricted` registers the t != 1 variants: the
// printed statements claim all t, but at t = 1 the substitution u = v(1-t)
// used to derive them is not invertible and the identities fail.
void add_generating_functions(Builder& b, bool restricted) {
  const ElementDomain t_domain = restricted ? ElementDomain::NotOne : ElementDomain::Full;
  const std::string suffix = restricted ? "-t-ne-1" : "";
  const std::string note = restricted ? "  (t != 1)" : "";

  b.add("thm4.1" + suffix,
        "sum_theta [A conj(C) theta|theta] F1(A theta;B,B';C;x,y) theta(t) = (q-1)(eps(t) conj(A)(1-t) "
        "F1(A;B,B';C;x/(1-t),y/(1-t)) - eps(xy) conj(A)C(-t) conj(B)(1-x) conj(B')(1-y))" + note,
        {ch("A"), ch("B"), ch("B'"), ch("C"), el("x"), el("y"), el("t", t_domain)},
        [](const Args& a) {
          auto [A, B, Bp, C] = a.chars<4>();
          auto [x, y, t] = a.elems<3>();
          const SumContext& ctx = a.ctx();
          CycInt sum = ctx.zero();
          if (t.is_zero()) return sum;
          for (std::uint32_t e = 0; e < ctx.order(); ++e) {
            const Character theta = ctx.character(e);
            sum += theta(t) * (Bn(a, A * C.conj() * theta, theta) * F1(a, A * theta, B, Bp, C, x, y));
          }
          return sum;
        },
        [](const Args& a) {
          auto [A, B, Bp, C] = a.chars<4>();
          auto [x, y, t] = a.elems<3>();
          const CharValue pref = eps(t) * A.conj()(one_minus(t));
          const CycInt first =
              guarded(a, pref, [&] { return F1(a, A, B, Bp, C, x / one_minus(t), y / one_minus(t)); });
          const CharValue corr = eps(x * y) * (A.conj() * C)(-t) * B.conj()(one_minus(x)) * Bp.conj()(one_minus(y));
          return qm1(a) * (first + signed_term(a.mutated(), value(a, corr)));
        },
        "sign of the second term", 1, DivisibleSide::Lhs);

  b.add("thm4.2" + suffix,
        "sum_theta [B theta|theta] F1(A;B theta,B';C;x,y) theta(t) = (q-1)(eps(t) conj(B)(1-t) "
        "F1(A;B,B';C;x/(1-t),y) - eps(y) conj(B)(-t) B' conj(C)(x) conj(A)C(1-x) conj(B')(x-y))" + note,
        {ch("A"), ch("B"), ch("B'"), ch("C"), el("x"), el("y"), el("t", t_domain)},
        [](const Args& a) {
          auto [A, B, Bp, C] = a.chars<4>();
          auto [x, y, t] = a.elems<3>();
          const SumContext& ctx = a.ctx();
          CycInt sum = ctx.zero();
          if (t.is_zero()) return sum;
          for (std::uint32_t e = 0; e < ctx.order(); ++e) {
            const Character theta = ctx.character(e);
            sum += theta(t) * (Bn(a, B * theta, theta) * F1(a, A, B * theta, Bp, C, x, y));
          }
          return sum;
        },
        [](const Args& a) {
          auto [A, B, Bp, C] = a.chars<4>();
          auto [x, y, t] = a.elems<3>();
          const CharValue pref = eps(t) * B.conj()(one_minus(t));
          const CycInt first = guarded(a, pref, [&] { return F1(a, A, B, Bp, C, x / one_minus(t), y); });
          const CharValue corr =
              eps(y) * B.conj()(-t) * (Bp * C.conj())(x) * (A.conj() * C)(one_minus(x)) * Bp.conj()(x - y);
          return qm1(a) * (first + signed_term(a.mutated(), value(a, corr)));
        },
        "sign of the second term", 1, DivisibleSide::Lhs);

  // As printed, the correction term of the 2F1 specialization reads
  // A(1-t) conj(A)C(t); specializing the F1 generating function gives
  // conj(A)C(-t), which is what the restricted variant checks.
  b.add("thm4.3-a" + suffix,
        "sum_theta [A conj(C) theta|theta] 2F1[B,A theta;C;x] theta(t) = (q-1)(eps(t) conj(A)(1-t) "
        "2F1[B,A;C;x/(1-t)] - eps(x) " + std::string(restricted ? "conj(A)C(-t)" : "A(1-t) conj(A)C(t)") +
            " conj(B)(1-x))" + note,
        {ch("A"), ch("B"), ch("C"), el("x"), el("t", t_domain)},
        [](const Args& a) {
          auto [A, B, C] = a.chars<3>();
          auto [x, t] = a.elems<2>();
          const SumContext& ctx = a.ctx();
          CycInt sum = ctx.zero();
          if (t.is_zero()) return sum;
          for (std::uint32_t e = 0; e < ctx.order(); ++e) {
            const Character theta = ctx.character(e);
            sum += theta(t) * (Bn(a, A * C.conj() * theta, theta) * F21(a, B, A * theta, C, x));
          }
          return sum;
        },
        [restricted](const Args& a) {
          auto [A, B, C] = a.chars<3>();
          auto [x, t] = a.elems<2>();
          const CharValue pref = eps(t) * A.conj()(one_minus(t));
          const CycInt first = guarded(a, pref, [&] { return F21(a, B, A, C, x / one_minus(t)); });
          const CharValue tail = restricted ? (A.conj() * C)(-t) : A(one_minus(t)) * (A.conj() * C)(t);
          const CharValue corr = eps(x) * tail * B.conj()(one_minus(x));
          return qm1(a) * (first + signed_term(a.mutated(), value(a, corr)));
        },
        "sign of the second term", 1, DivisibleSide::Lhs);

  b.add("thm4.3-b" + suffix,
        "sum_theta [B theta|theta] 2F1[B theta,A;C;x] theta(t) = (q-1)(eps(t) conj(B)(1-t) "
        "2F1[B,A;C;x/(1-t)] - conj(B)(-t) conj(A)C(1-x) conj(C)(x))" + note,
        {ch("A"), ch("B"), ch("C"), el("x"), el("t", t_domain)},
        [](const Args& a) {
          auto [A, B, C] = a.chars<3>();
          auto [x, t] = a.elems<2>();
          const SumContext& ctx = a.ctx();
          CycInt sum = ctx.zero();
          if (t.is_zero()) return sum;
          for (std::uint32_t e = 0; e < ctx.order(); ++e) {
            const Character theta = ctx.character(e);
            sum += theta(t) * (Bn(a, B * theta, theta) * F21(a, B * theta, A, C, x));
          }
          return sum;
        },
        [](const Args& a) {
          auto [A, B, C] = a.chars<3>();
          auto [x, t] = a.elems<2>();
          const CharValue pref = eps(t) * B.conj()(one_minus(t));
          const CycInt first = guarded(a, pref, [&] { return F21(a, B, A, C, x / one_minus(t)); });
          const CharValue corr = B.conj()(-t) * (A.conj() * C)(one_minus(x)) * C.conj()(x);
          return qm1(a) * (first + signed_term(a.mutated(), value(a, corr)));
        },
        "sign of the second term", 1, DivisibleSide::Lhs);
}

// Copies of the transformation entries with the pole lines removed. As printed
// they claim all of F_q, but the transformed arguments are undefined at x = 1
// or y = 1 and the identities fail there.
void add_transformations_off_poles(Builder& b) {
  const std::vector<std::pair<std::string, std::vector<std::string>>> restrictions = {
      {"thm3.3-a", {"x", "y"}}, {"thm3.3-b", {"x"}}, {"thm3.3-c", {"x", "y"}}, {"thm3.4-a", {"y"}},
      {"thm3.4-b", {"x", "y"}}, {"cor3.2-a", {"x"}}, {"cor3.2-b", {"x", "y"}},
  };
  for (const auto& [id, names] : restrictions) {
    auto it = std::find_if(b.cases.begin(), b.cases.end(), [&](const IdentityCase& c) { return c.id == id; });
    IdentityCase c = *it;
    std::string joined;
    for (const std::string& n : names) joined += n;
    c.id += "-" + joined + "-ne-1";
    for (ParamSpec& p : c.params) {
      if (std::find(names.begin(), names.end(), p.name) != names.end()) p.domain = ElementDomain::NotOne;
    }
    c.statement += "  (";
    for (std::size_t i = 0; i < names.size(); ++i) c.statement += (i ? ", " : "") + names[i];
    c.statement += " != 1)";
    b.cases.push_back(std::move(c));
  }
}

std::vector<IdentityCase> build_registry() {
  Builder b;
  add_foundation(b);
  add_reductions(b);
  add_transformations(b);
  add_transformations_off_poles(b);
  add_generating_functions(b, false);
  add_generating_functions(b, true);
  return std::move(b.cases);
}

}  // namespace

const std::vector<IdentityCase>& registry() {
  static const std::vector<IdentityCase> cases = build_registry();
  return cases;
}

}  // namespace fqsum
