#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "bernpos/commands.hpp"

namespace {

std::vector<bernpos::Rational> parse_point(const std::string& text) {
  std::vector<bernpos::Rational> out;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ',')) out.push_back(bernpos::parse_rational(part));
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  using namespace bernpos;
  CLI::App app{"Exact Bernstein positivity certificates on the unit box"};
  app.set_version_flag("--version", std::string(version));
  app.require_subcommand(1);

  cli::CertifyArgs certify;
  std::string method = "raise";
  std::string q_start;
  auto* c = app.add_subcommand("certify", "Build a positivity certificate for a polynomial document");
  c->add_option("input", certify.input, "Polynomial document")->required();
  c->add_option("-o,--output", certify.output, "Certificate file (default: standard output)");
  c->add_option("--method", method, "nested or raise")->check(CLI::IsMember({"nested", "raise"}));
  c->add_option("--max-iter", certify.max_iter,
                "raise: degree doublings (default 20); nested: enclosure bisection depth (default 64)");
  c->add_option("--q-start", q_start, "Starting degrees a,b for the raise method");

  cli::VerifyArgs verify_args;
  auto* v = app.add_subcommand("verify", "Check a certificate against a polynomial document");
  v->add_option("poly", verify_args.poly, "Polynomial document")->required();
  v->add_option("cert", verify_args.cert, "Certificate document")->required();

  cli::EncloseArgs enclose;
  Degree q1 = 0, q2 = 0;
  std::string width;
  auto* e = app.add_subcommand("enclose-min", "Print an exact enclosure 'lo hi q1 q2' of the minimum over the box");
  e->add_option("input", enclose.input, "Polynomial document (bivariate)")->required();
  auto* q1_opt = e->add_option("--q1", q1, "Degree in x1");
  auto* q2_opt = e->add_option("--q2", q2, "Degree in x2");
  auto* w_opt = e->add_option("--target-width", width, "Double degrees until hi - lo <= W");
  e->add_option("--max-iter", enclose.max_iter, "Maximum doublings with --target-width (default 20)");

  cli::EvalArgs eval;
  std::string at;
  auto* ev = app.add_subcommand("eval", "Evaluate a polynomial document exactly");
  ev->add_option("input", eval.input, "Polynomial document")->required();
  ev->add_option("--at", at, "Point x1 or x1,x2")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& err) {
    // Help and version requests exit 0; every other parse failure is a usage error.
    const int code = app.exit(err);
    return code == 0 ? 0 : cli::usage;
  }

  try {
    if (c->parsed()) {
      certify.method = method == "nested" ? Method::Nested : Method::DegreeRaise;
      if (!q_start.empty()) {
        const auto qs = parse_point(q_start);
        if (qs.size() != 2 || qs[0].get_den() != 1 || qs[1].get_den() != 1 || qs[0] < 0 || qs[1] < 0)
          throw std::invalid_argument("--q-start expects two non-negative integers a,b");
        certify.q_start = std::pair{to_degree(qs[0].get_num()), to_degree(qs[1].get_num())};
      }
      return cli::cmd_certify(certify, std::cout, std::cerr);
    }
    if (v->parsed()) return cli::cmd_verify(verify_args, std::cout, std::cerr);
    if (e->parsed()) {
      if (*q1_opt) enclose.q1 = q1;
      if (*q2_opt) enclose.q2 = q2;
      if (*w_opt) enclose.target_width = parse_rational(width);
      return cli::cmd_enclose_min(enclose, std::cout, std::cerr);
    }
    if (ev->parsed()) {
      eval.at = parse_point(at);
      return cli::cmd_eval(eval, std::cout, std::cerr);
    }
  } catch (const std::exception& ex) {
    std::cerr << "status=error message=\"" << ex.what() << "\"\n";
    return cli::usage;
  }
  return cli::usage;
}
