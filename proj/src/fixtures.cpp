#include "tautcert/fixtures.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "tautcert/error.hpp"

namespace tautcert {

Presentation circle_bundle_presentation(long long e) {
  std::vector<std::string> gens{"a", "b", "z"};
  Word r1, r2, r3;
  r1.append(0, 1).append(2, 1).append(0, -1).append(2, -1);
  r2.append(1, 1).append(2, 1).append(1, -1).append(2, -1);
  r3.append(0, 1).append(1, 1).append(0, -1).append(1, -1);
  if (e != 0) r3.append(2, static_cast<int>(-e));
  return Presentation(gens, {r1, r2, r3});
}

Presentation mapping_torus_presentation(int g, int s) {
  if (g < 2 || s < 0 || s > g)
    fail(ErrorCode::bad_argument, "mapping torus needs g >= 2 and 0 <= s <= g");
  std::vector<std::string> gens;
  for (int i = 1; i <= g; ++i) {
    gens.push_back("a" + std::to_string(i));
    gens.push_back("b" + std::to_string(i));
  }
  gens.push_back("tau");
  const int tau = 2 * g;
  auto A = [](int i) { return 2 * (i - 1); };
  auto B = [](int i) { return 2 * (i - 1) + 1; };

  std::vector<Word> rels;
  Word surface;
  for (int i = 1; i <= g; ++i) {
    surface.append(A(i), 1).append(B(i), 1).append(A(i), -1).append(B(i), -1);
  }
  rels.push_back(surface);
  for (int i = 1; i <= g; ++i) {
    Word ra;
    ra.append(tau, 1).append(A(i), 1).append(tau, -1).append(A(i), -1);
    rels.push_back(ra);
    Word rb;
    rb.append(tau, 1).append(B(i), 1).append(tau, -1);
    if (i <= s) rb.append(A(i), -1);
    rb.append(B(i), -1);
    rels.push_back(rb);
  }
  return Presentation(gens, rels);
}

IntMat mapping_torus_monodromy(int g, int s) {
  if (g < 2 || s < 0 || s > g)
    fail(ErrorCode::bad_argument, "mapping torus needs g >= 2 and 0 <= s <= g");
  IntMat M = identity_matrix(2 * g);
  // Twist along a_i: b_i -> b_i a_i, i.e. column b_i gains a 1 in row a_i.
  for (int i = 1; i <= s; ++i) M[2 * (i - 1)][2 * (i - 1) + 1] = 1;
  return M;
}

Presentation torus_bundle_i_presentation() {
  // f(a) = b, f(b) = a^-1.
  std::vector<std::string> gens{"a", "b", "tau"};
  Word r1;  // tau a tau^-1 b^-1
  r1.append(2, 1).append(0, 1).append(2, -1).append(1, -1);
  Word r2;  // tau b tau^-1 a
  r2.append(2, 1).append(1, 1).append(2, -1).append(0, 1);
  return Presentation(gens, {r1, r2});
}

Presentation surgered_presentation(const SurgerySpec& spec) {
  if (spec.p < 0) fail(ErrorCode::invalid_surgery, "surgery coefficient needs p >= 0");
  if (spec.q == 0 && spec.p != 1)
    fail(ErrorCode::invalid_surgery, "q = 0 only in the meridian fill 1/0");
  if (std::gcd(spec.p, spec.q) != 1 && !(spec.p == 1 && spec.q == 0))
    fail(ErrorCode::invalid_surgery, "surgery coefficient p/q must be reduced");
  Word filling = spec.meridian.pow(static_cast<int>(spec.p));
  filling.append(spec.longitude.pow(static_cast<int>(spec.q)));
  if (filling.empty())
    fail(ErrorCode::invalid_surgery, "filling word is trivial");
  std::vector<Word> rels = spec.complement.relators();
  rels.push_back(filling);
  return Presentation(spec.complement.generators(), rels);
}

namespace {

// psi, given on the base free abelianization, transported to another
// presentation on the same generators through generator values.
Covector transport_class(const std::vector<long long>& gen_values,
                         const AbelianizationData& ab) {
  int g = static_cast<int>(gen_values.size());
  // Solve psi' . free_map = gen_values over the integers.
  IntMat At(g, IntVec(ab.b));
  for (int i = 0; i < g; ++i)
    for (int j = 0; j < ab.b; ++j) At[i][j] = ab.free_map[j][i];
  IntVec rhs(g);
  for (int i = 0; i < g; ++i) rhs[i] = gen_values[i];
  auto sol = solve_integer(At, rhs);
  if (!sol)
    fail(ErrorCode::bad_argument,
         "class does not descend through the canonical identification");
  std::vector<long long> entries;
  for (const Int& x : *sol) entries.push_back(static_cast<long long>(x));
  return Covector::integral(entries);
}

}  // namespace

SurgeryScalingReport verify_surgery_scaling(
    const FixtureManifold& fixture,
    const std::vector<std::pair<long long, long long>>& fills, const Covector& psi) {
  if (!fixture.meridian || !fixture.longitude)
    fail(ErrorCode::bad_argument, "fixture carries no meridian/longitude data");

  SurgerySpec meridian_fill{fixture.presentation, *fixture.meridian,
                            *fixture.longitude, 1, 0};
  Presentation base = surgered_presentation(meridian_fill);
  AbelianizationData base_ab = homology(base);
  std::vector<long long> gen_values = psi_on_generators(base, base_ab, psi);

  SurgeryScalingReport report{alexander_poly_psi(base, psi), {}, true};
  for (auto [p, q] : fills) {
    if (p == 0)
      fail(ErrorCode::invalid_surgery,
           "p/q = 0 is the zero surgery; use the zero-surgery formula");
    SurgerySpec spec{fixture.presentation, *fixture.meridian, *fixture.longitude, p, q};
    Presentation filled = surgered_presentation(spec);
    AbelianizationData ab = homology(filled);
    Covector psi_f = transport_class(gen_values, ab);
    CanonicalForm delta_filled = alexander_poly_psi(filled, psi_f);
    CanonicalForm expected = canonicalize(Int(p) * report.delta_base.poly());
    SurgeryScalingFill fill{p, q, delta_filled, expected, "ok"};
    if (!(delta_filled == expected)) {
      fill.status =
          fixture.totally_rationally_null_homologous ? "failed" : "inconclusive";
      if (fill.status == "failed") report.all_ok = false;
    }
    report.fills.push_back(std::move(fill));
  }
  return report;
}

ZeroSurgeryResult zero_surgery_formula(const CanonicalForm& delta_complement,
                                       long long psi_mu, int b1_complement) {
  if (delta_complement.rank() != 1)
    fail(ErrorCode::rank_mismatch, "the complement polynomial must have rank 1");
  if (psi_mu == 0) {
    // Meridian-trivial classes survive to the filling, and their cyclic
    // covers have unbounded first Betti number.
    return {canonicalize(LaurentPoly::zero(1)), true};
  }
  LaurentPoly t = LaurentPoly::variable(1, 0);
  LaurentPoly one = LaurentPoly::constant(1, 1);
  LaurentPoly tm = LaurentPoly::variable(1, 0, static_cast<int>(psi_mu)) - one;
  LaurentPoly numerator = delta_complement.poly() * tm;
  LaurentPoly denom = t - one;
  if (b1_complement < 2) denom = denom * denom;
  auto quotient = exact_divide(numerator, denom);
  if (!quotient)
    fail(ErrorCode::division_not_exact,
         "zero-surgery formula does not divide; inconsistent input data");
  return {canonicalize(*quotient), false};
}

FixtureManifold circle_bundle_fixture(long long e) {
  FixtureManifold f;
  f.name = "circle-bundle-e" + std::to_string(e);
  f.presentation = circle_bundle_presentation(e);
  return f;
}

FixtureManifold mapping_torus_fixture(int g, int s) {
  FixtureManifold f;
  f.name = "mapping-torus-g" + std::to_string(g) + "-s" + std::to_string(s);
  f.presentation = mapping_torus_presentation(g, s);
  AbelianizationData ab = homology(f.presentation);
  // Dual ball = interval with endpoints +-(2g-2) in the Gamma coordinate;
  // the reduction row is Gamma itself (the class of the suspension flow).
  f.ball = NormBallPair::from_functionals({{Int(2 * g - 2)}});
  Exponents gamma = ab.generator_image(2 * g);
  IntVec row;
  for (int v : gamma) row.emplace_back(v);
  f.reduce = {row};
  return f;
}

FixtureManifold torus_bundle_i_fixture() {
  FixtureManifold f;
  f.name = "torus-bundle-i";
  f.presentation = torus_bundle_i_presentation();
  return f;
}

FixtureManifold product_with_trefoil_fixture(const std::string& base) {
  Presentation base_pres;
  if (base == "t3") {
    std::vector<std::string> gens{"a", "b", "c"};
    Word r1, r2, r3;
    r1.append(0, 1).append(1, 1).append(0, -1).append(1, -1);
    r2.append(0, 1).append(2, 1).append(0, -1).append(2, -1);
    r3.append(1, 1).append(2, 1).append(1, -1).append(2, -1);
    base_pres = Presentation(gens, {r1, r2, r3});
  } else if (base == "n2") {
    base_pres = circle_bundle_presentation(2);
  } else {
    fail(ErrorCode::bad_argument, "unknown base '" + base + "'");
  }

  // Free product with the trefoil group <x,y | xyx y^-1 x^-1 y^-1>,
  // modelling a knot contained in a ball.
  std::vector<std::string> gens = base_pres.generators();
  int x = static_cast<int>(gens.size());
  int y = x + 1;
  gens.push_back("x");
  gens.push_back("y");
  std::vector<Word> rels;
  for (const Word& r : base_pres.relators()) rels.push_back(r);
  Word trefoil;
  trefoil.append(x, 1).append(y, 1).append(x, 1).append(y, -1).append(x, -1).append(y, -1);
  rels.push_back(trefoil);

  FixtureManifold f;
  f.name = base + "-with-trefoil";
  f.presentation = Presentation(gens, rels);
  f.meridian = Word::generator(x, 1);
  // Canonical longitude (xy)^3 x^-6: central times the meridian correction.
  Word lambda;
  for (int i = 0; i < 3; ++i) lambda.append(x, 1).append(y, 1);
  lambda.append(x, -6);
  f.longitude = lambda;
  f.totally_rationally_null_homologous = true;
  return f;
}

FixtureManifold square_ball_fixture() {
  FixtureManifold f;
  f.name = "n2-square-ball";
  f.presentation = circle_bundle_presentation(2);
  f.ball = NormBallPair::from_functionals({{Int(2), Int(0)}, {Int(0), Int(2)}});
  f.reduce = identity_matrix(2);
  RatVec e0{Rat(1), Rat(1)};
  f.euler_vectors["v0"] = e0;
  return f;
}

FixtureManifold octahedron_ball_fixture() {
  FixtureManifold f;
  f.name = "t3-octahedron-ball";
  std::vector<std::string> gens{"a", "b", "c"};
  Word r1, r2, r3;
  r1.append(0, 1).append(1, 1).append(0, -1).append(1, -1);
  r2.append(0, 1).append(2, 1).append(0, -1).append(2, -1);
  r3.append(1, 1).append(2, 1).append(1, -1).append(2, -1);
  f.presentation = Presentation(gens, {r1, r2, r3});
  f.ball = NormBallPair::from_functionals(
      {{Int(2), Int(0), Int(0)}, {Int(0), Int(2), Int(0)}, {Int(0), Int(0), Int(2)}});
  f.reduce = identity_matrix(3);
  return f;
}

std::vector<FixtureManifold> standard_fixtures() {
  std::vector<FixtureManifold> out;
  for (long long e : {0LL, 1LL, 2LL, 3LL}) out.push_back(circle_bundle_fixture(e));
  out.push_back(mapping_torus_fixture(2, 0));
  out.push_back(mapping_torus_fixture(2, 1));
  out.push_back(mapping_torus_fixture(2, 2));
  out.push_back(mapping_torus_fixture(3, 2));
  out.push_back(torus_bundle_i_fixture());
  out.push_back(product_with_trefoil_fixture("t3"));
  out.push_back(product_with_trefoil_fixture("n2"));
  out.push_back(square_ball_fixture());
  out.push_back(octahedron_ball_fixture());
  return out;
}

namespace {

std::string strip_comment(const std::string& line) {
  auto pos = line.find('#');
  return pos == std::string::npos ? line : line.substr(0, pos);
}

std::vector<std::string> split_ws(const std::string& s) {
  std::istringstream is(s);
  std::vector<std::string> out;
  std::string tok;
  while (is >> tok) out.push_back(tok);
  return out;
}

}  // namespace

FixtureManifold parse_fixture(const std::string& text, const std::string& name) {
  std::istringstream is(text);
  std::string line;
  std::ostringstream pres_text;
  std::vector<std::pair<int, std::string>> meridian_lines, longitude_lines;
  std::vector<IntVec> ball_rows;
  IntMat reduce_rows;
  std::vector<std::pair<std::string, RatVec>> eulers;
  bool trnh = false;
  int line_no = 0;

  while (std::getline(is, line)) {
    ++line_no;
    std::string body = strip_comment(line);
    auto tokens = split_ws(body);
    if (tokens.empty()) continue;
    const std::string& head = tokens[0];
    if (head == "gens" || head == "rel") {
      pres_text << body << "\n";
    } else if (head == "meridian:") {
      meridian_lines.emplace_back(line_no, body.substr(body.find(':') + 1));
    } else if (head == "longitude:") {
      longitude_lines.emplace_back(line_no, body.substr(body.find(':') + 1));
    } else if (head == "flags:") {
      for (std::size_t i = 1; i < tokens.size(); ++i)
        if (tokens[i] == "trnh") trnh = true;
    } else if (head == "ball:") {
      IntVec row;
      for (std::size_t i = 1; i < tokens.size(); ++i) row.emplace_back(Int(tokens[i]));
      ball_rows.push_back(std::move(row));
    } else if (head == "reduce:") {
      IntVec row;
      for (std::size_t i = 1; i < tokens.size(); ++i) row.emplace_back(Int(tokens[i]));
      reduce_rows.push_back(std::move(row));
    } else if (head == "euler:") {
      if (tokens.size() < 2)
        fail(ErrorCode::parse_error,
             "line " + std::to_string(line_no) + ": euler needs a label");
      RatVec v;
      for (std::size_t i = 2; i < tokens.size(); ++i) v.push_back(parse_rational(tokens[i]));
      eulers.emplace_back(tokens[1], std::move(v));
    } else {
      fail(ErrorCode::parse_error,
           "line " + std::to_string(line_no) + ": unknown directive '" + head + "'");
    }
  }

  FixtureManifold f;
  f.name = name;
  f.presentation = parse_presentation(pres_text.str());
  for (auto& [ln, w] : meridian_lines) f.meridian = parse_word(w, f.presentation, ln);
  for (auto& [ln, w] : longitude_lines) f.longitude = parse_word(w, f.presentation, ln);
  f.totally_rationally_null_homologous = trnh;
  for (auto& [label, v] : eulers) f.euler_vectors[label] = v;

  if (!ball_rows.empty()) {
    f.ball = NormBallPair::from_functionals(ball_rows);
    int k = f.ball->dim();
    int b = homology(f.presentation).b;
    if (reduce_rows.empty()) {
      if (k != b)
        fail(ErrorCode::parse_error,
             "ball dimension differs from b1; a reduce: section is required");
      f.reduce = identity_matrix(b);
    } else {
      if (static_cast<int>(reduce_rows.size()) != k)
        fail(ErrorCode::parse_error, "reduce: needs one row per ball coordinate");
      for (const IntVec& row : reduce_rows)
        if (static_cast<int>(row.size()) != b)
          fail(ErrorCode::parse_error, "reduce: rows must have b1 entries");
      f.reduce = reduce_rows;
    }
  }
  return f;
}

std::string render_presentation(const Presentation& P) {
  std::ostringstream os;
  os << "gens";
  for (const std::string& g : P.generators()) os << " " << g;
  os << "\n";
  for (const Word& r : P.relators()) {
    os << "rel";
    for (const Letter& l : r.letters()) {
      os << " " << P.generators()[l.gen];
      if (l.exp != 1) os << "^" << l.exp;
    }
    os << "\n";
  }
  return os.str();
}

std::string render_fixture(const FixtureManifold& F) {
  std::ostringstream os;
  os << render_presentation(F.presentation);
  auto render_word = [&](const Word& w) {
    std::ostringstream ws;
    for (const Letter& l : w.letters()) {
      ws << " " << F.presentation.generators()[l.gen];
      if (l.exp != 1) ws << "^" << l.exp;
    }
    return ws.str();
  };
  if (F.meridian) os << "meridian:" << render_word(*F.meridian) << "\n";
  if (F.longitude) os << "longitude:" << render_word(*F.longitude) << "\n";
  if (F.totally_rationally_null_homologous) os << "flags: trnh\n";
  if (F.ball) {
    for (const IntVec& u : F.ball->functionals()) {
      os << "ball:";
      for (const Int& v : u) os << " " << v;
      os << "\n";
    }
    int b = homology(F.presentation).b;
    bool identity = static_cast<int>(F.reduce.size()) == b;
    if (identity) {
      for (int i = 0; i < b && identity; ++i)
        for (int j = 0; j < b && identity; ++j)
          if (F.reduce[i][j] != (i == j ? 1 : 0)) identity = false;
    }
    if (!identity) {
      for (const IntVec& row : F.reduce) {
        os << "reduce:";
        for (const Int& v : row) os << " " << v;
        os << "\n";
      }
    }
  }
  for (const auto& [label, v] : F.euler_vectors) {
    os << "euler: " << label;
    for (const Rat& x : v) os << " " << rat_to_string(x);
    os << "\n";
  }
  return os.str();
}

}  // namespace tautcert
