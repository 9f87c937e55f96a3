#include "report.hpp"

#include <array>

#include "quintic/mpfield.hpp"

namespace quintic::cli {

namespace {

using json = nlohmann::ordered_json;

json complex_json(const Complex& z, int digits) {
  return {{"re", format_real(z.re, digits)}, {"im", format_real(z.im, digits)}};
}

std::string number(const Complex& z, int digits) { return format_complex(z, digits); }

MonicQuintic input_quintic(const json& input, const PrecisionCtx& ctx) {
  const std::array<std::string, 5> text{input.at("m").get<std::string>(), input.at("n").get<std::string>(),
                                        input.at("p").get<std::string>(), input.at("q").get<std::string>(),
                                        input.at("r").get<std::string>()};
  return MonicQuintic::parse({text[0], text[1], text[2], text[3], text[4]}, ctx);
}

}  // namespace

json input_json(const SolveInput& in) {
  return {{"m", in.m},
          {"n", in.n},
          {"p", in.p},
          {"q", in.q},
          {"r", in.r},
          {"digits", std::to_string(in.digits)},
          {"seed", std::to_string(in.seed)}};
}

json report_json(const RootReport& report, const SolveInput& in) {
  const int digits = in.digits;
  json out;
  out["roots"] = json::array();
  for (const auto& z : report.roots) out["roots"].push_back(complex_json(z, digits));
  out["residuals"] = json::array();
  for (const auto& r : report.residuals) out["residuals"].push_back(format_real(r, 6));

  const BringReduction& red = report.reduction;
  const TschirnhausParams& t = red.params;
  json diag;
  diag["alpha"] = number(t.alpha, digits);
  diag["xi"] = number(t.xi, digits);
  diag["eta"] = number(t.eta, digits);
  diag["d"] = number(t.d, digits);
  diag["A"] = number(red.A, digits);
  diag["B"] = number(red.B, digits);
  diag["s"] = number(red.s, digits);
  diag["strategy"] = std::string(to_string(report.bring.strategy));
  diag["shift"] = number(report.shift_applied, 6);
  diag["precision_used"] = std::to_string(report.precision_used);
  diag["candidate_residuals"] = json::array();
  for (const auto& r : report.candidate_residuals) diag["candidate_residuals"].push_back(format_real(r, 6));
  out["diagnostics"] = std::move(diag);
  out["input"] = input_json(in);
  return out;
}

json fallback_json(const std::vector<Complex>& roots, const MonicQuintic& f, const SolveInput& in,
                   const SolverError& cause) {
  const PrecisionCtx ctx = PrecisionCtx::with_digits(in.digits, in.seed);
  json out;
  out["roots"] = json::array();
  out["residuals"] = json::array();
  for (const auto& z : roots) {
    out["roots"].push_back(complex_json(z, in.digits));
    out["residuals"].push_back(format_real(abs(f.eval(z, ctx)), 6));
  }
  json diag;
  for (const char* key : {"alpha", "xi", "eta", "d", "A", "B", "s", "shift"}) diag[key] = "";
  diag["strategy"] = "oracle";
  diag["precision_used"] = std::to_string(in.digits);
  diag["candidate_residuals"] = json::array({"", "", "", ""});
  diag["fallback_reason"] = {{"code", std::string(to_string(cause.code()))},
                             {"stage", cause.stage()},
                             {"message", cause.what()}};
  out["diagnostics"] = std::move(diag);
  out["input"] = input_json(in);
  return out;
}

json error_json(const SolverError& error, const SolveInput& in, const BringReduction* reduction) {
  json out;
  out["error"] = {{"code", std::string(to_string(error.code()))},
                  {"stage", error.stage()},
                  {"message", error.what()}};
  if (reduction) {
    const int digits = in.digits;
    const TschirnhausParams& t = reduction->params;
    out["diagnostics"] = {{"alpha", number(t.alpha, digits)},
                          {"xi", number(t.xi, digits)},
                          {"eta", number(t.eta, digits)},
                          {"d", number(t.d, digits)},
                          {"A", number(reduction->A, digits)},
                          {"B", number(reduction->B, digits)},
                          {"s", number(reduction->s, digits)},
                          {"shift", number(reduction->shift, 6)},
                          {"precision_used", std::to_string(reduction->precision_used)}};
  }
  out["input"] = input_json(in);
  return out;
}

std::vector<CheckResult> verify_report(const json& report) {
  const json& input = report.at("input");
  const int digits = std::stoi(input.at("digits").get<std::string>());
  const PrecisionCtx ctx = PrecisionCtx::with_digits(digits);
  ctx.validate();
  const MonicQuintic f = input_quintic(input, ctx);
  const json& roots = report.at("roots");
  if (!roots.is_array() || roots.size() != 5)
    throw SolverError(ErrorCode::InvalidArgument, "cli.verify", "expected exactly five roots");

  const Real tol = half_precision_tol(ctx) * f.scale(ctx);
  std::vector<CheckResult> out;
  Complex sum = f.m;
  Complex prod(1, 0, ctx.bits());
  for (std::size_t i = 0; i < 5; ++i) {
    const json& z = roots.at(i);
    Complex root(parse_real(z.at("re").get<std::string>(), ctx), parse_real(z.at("im").get<std::string>(), ctx));
    Real res = abs(f.eval(root, ctx));
    out.push_back({"residual r" + std::to_string(i + 1), res <= tol, format_real(res, 6)});
    sum += root;
    prod = prod * root;
  }
  Real sum_err = abs(sum);
  Real prod_err = abs(prod + f.r);
  out.push_back({"vieta sum", sum_err <= tol, format_real(sum_err, 6)});
  out.push_back({"vieta product", prod_err <= tol, format_real(prod_err, 6)});
  return out;
}

}  // namespace quintic::cli
