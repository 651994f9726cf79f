#include "semico/verify.hpp"

#include <algorithm>

#include "semico/format.hpp"
#include "semico/oracle.hpp"
#include "semico/reliability.hpp"
#include "semico/signature.hpp"
#include "semico/transform.hpp"

namespace semico {

bool VerificationReport::all_passed() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const Check& c) { return c.passed; });
}

std::size_t VerificationReport::failures() const {
  return static_cast<std::size_t>(std::count_if(
      checks.begin(), checks.end(), [](const Check& c) { return !c.passed; }));
}

namespace {

std::string describe(const MultilinearForm& f) { return format_simple_form(f); }
std::string describe(const SetFamily& f) { return f.to_string(); }
std::string describe(const TruthTable& t) { return t.to_bit_string(); }
std::string describe(const SignatureVector& s) { return s.to_string(); }
std::string describe(const DiagonalPoly& d) { return format_coefficients(d); }
std::string describe(const Rational& q) { return format_rational(q); }
std::string describe(const SmallCounts& c) {
  return "(" + std::to_string(c.alpha1) + ", " + std::to_string(c.alpha2) +
         ", " + std::to_string(c.beta1) + ", " + std::to_string(c.beta2) + ")";
}

class Recorder {
 public:
  template <typename T>
  void equal(const std::string& name, const T& fast, const T& reference) {
    Check c{name, fast == reference, {}};
    if (!c.passed)
      c.detail = "fast " + describe(fast) + " vs oracle " + describe(reference);
    report_.checks.push_back(std::move(c));
  }

  void expect(const std::string& name, bool ok, std::string detail) {
    report_.checks.push_back({name, ok, ok ? std::string{} : std::move(detail)});
  }

  void skip(std::string why) { report_.skipped.push_back(std::move(why)); }

  VerificationReport take() { return std::move(report_); }

 private:
  VerificationReport report_;
};

// A fixed, asymmetric interior point: p_i = i / (n + 2).
std::vector<Rational> probe_point(int n) {
  std::vector<Rational> p;
  for (int i = 1; i <= n; ++i) p.emplace_back(i, n + 2);
  return p;
}

}  // namespace

VerificationReport verify_system(const TruthTable& t, const Limits& limits) {
  require_semicoherent(t);
  if (t.n() > oracle::kMaxComponents)
    throw CapacityError("verify supports at most " +
                            std::to_string(oracle::kMaxComponents) +
                            " components",
                        oracle::kMaxComponents);
  Recorder rec;
  const int n = t.n();
  const SubsetMask::Bits points = SubsetMask::Bits{1} << n;

  const MultilinearForm form = mobius_transform(t);
  const MultilinearForm expected_form = oracle::simple_form(t);
  const TruthTable dual = dualize_table(t);
  const TruthTable expected_dual = oracle::dual_table(t);
  rec.equal("mobius = expanded self-descriptive form", form, expected_form);
  rec.equal("zeta(mobius(t)) = t", zeta_transform(form, limits), t);
  rec.equal("dual table", dual, expected_dual);

  const SetFamily paths = minimal_path_sets(t);
  const SetFamily cuts = minimal_cut_sets(t);
  rec.equal("minimal path sets", paths, oracle::minimal_path_sets(t));
  rec.equal("minimal cut sets", cuts, oracle::minimal_cut_sets(t));
  rec.equal("paths from simple form", paths_from_simple_form(form), paths);
  rec.equal("table from paths", table_from_paths(paths, limits),
            oracle::table_from_paths(paths));
  rec.equal("table from cuts", table_from_cuts(cuts, limits),
            oracle::table_from_cuts(cuts));
  rec.equal("cuts from paths", cuts_from_paths(paths, limits), cuts);
  rec.equal("paths from cuts", cuts_from_paths(cuts, limits), paths);

  const std::size_t max_r = static_cast<std::size_t>(
      std::min(limits.max_r, oracle::kMaxFamilySize));
  const std::size_t r = std::max(paths.size(), cuts.size());
  if (r > max_r) {
    rec.skip("inclusion-exclusion routes: family of " + std::to_string(r) +
             " sets exceeds max-r " + std::to_string(max_r));
  } else {
    rec.equal("inclusion-exclusion simple form",
              simple_form_from_paths(paths, limits), expected_form);
    rec.equal("inclusion-exclusion dual simple form",
              dual_simple_form_from_cuts(cuts, limits),
              oracle::simple_form(expected_dual));

    std::string mismatch;
    for (SubsetMask::Bits a = 0; a < points && mismatch.empty(); ++a) {
      const SubsetMask subset(a);
      const Coefficient fast = formation_balance(paths, subset, limits);
      const Coefficient slow = oracle::formations(paths, subset).balance();
      if (fast != slow || fast != expected_form.coefficient(subset))
        mismatch = format_subset(subset) + ": balance " +
                   std::to_string(fast) + ", formations " +
                   std::to_string(slow) + ", d(A) " +
                   std::to_string(expected_form.coefficient(subset));
    }
    rec.expect("formation balance = d(A)", mismatch.empty(), mismatch);

    rec.equal("diagonal from paths", diagonal_from_paths(paths, limits),
              diagonal_coefficients(expected_form));
    rec.equal("dual diagonal from cuts", diagonal_from_paths(cuts, limits),
              diagonal_coefficients(oracle::simple_form(expected_dual)));
    rec.equal("signature from paths", signature_from_paths(paths, limits),
              oracle::signature(t));

    const std::vector<Rational> p = probe_point(n);
    rec.equal("inclusion-exclusion reliability",
              evaluate_inclusion_exclusion<Rational>(paths, p, limits),
              oracle::reliability(t, p));
  }

  const SignatureVector sig = signature_boland(t);
  rec.equal("Boland signature", sig, oracle::signature(t));
  rec.equal("signature from diagonal",
            signature_from_diagonal(diagonal_coefficients(form)), sig);
  rec.equal("dual signature", signature_boland(dual), dual_signature(sig));
  rec.equal("small counts from signature", small_counts_from_signature(sig),
            oracle::small_counts(t));

  const std::vector<Rational> p = probe_point(n);
  rec.equal("reliability at interior point",
            evaluate_reliability<Rational>(form, p), oracle::reliability(t, p));

  std::string vertex_mismatch;
  for (SubsetMask::Bits a = 0; a < points && vertex_mismatch.empty(); ++a) {
    std::vector<Rational> x(n);
    for (int i = 1; i <= n; ++i) x[i - 1] = SubsetMask(a).contains(i) ? 1 : 0;
    const Rational expected = t[SubsetMask(a)] ? 1 : 0;
    for (TableForm tf :
         {TableForm::kSelfDescriptive, TableForm::kDualSelfDescriptive,
          TableForm::kSimple, TableForm::kDualSimple,
          TableForm::kDisjunctiveNormal, TableForm::kConjunctiveNormal})
      if (evaluate_table_form<Rational>(tf, t, x) != expected)
        vertex_mismatch = "form " + std::to_string(static_cast<int>(tf)) +
                          " at " + format_subset(SubsetMask(a));
  }
  rec.expect("all table forms at vertices", vertex_mismatch.empty(),
             vertex_mismatch);

  return rec.take();
}

}  // namespace semico
