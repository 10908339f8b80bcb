#pragma once

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "bernpos/bernpos.hpp"
#include "bernpos/document.hpp"

namespace bernpos::cli {

/// Process exit codes; the only machine contract of the command line.
enum ExitCode : int {
  ok = 0,
  usage = 1,         ///< I/O, parse or argument errors
  refuted = 2,       ///< not positive, or certificate invalid
  inconclusive = 3,  ///< iteration cap reached
};

struct CertifyArgs {
  std::string input;
  std::string output;  ///< empty: standard output
  Method method = Method::DegreeRaise;
  std::optional<std::size_t> max_iter;
  std::optional<std::pair<Degree, Degree>> q_start;
};

struct VerifyArgs {
  std::string poly;
  std::string cert;
};

struct EncloseArgs {
  std::string input;
  std::optional<Degree> q1;
  std::optional<Degree> q2;
  std::optional<Rational> target_width;
  std::size_t max_iter = 20;
};

struct EvalArgs {
  std::string input;
  std::vector<Rational> at;
};

namespace detail {

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline std::string point(const std::vector<Rational>& w) {
  std::string s;
  for (const auto& x : w) s += (s.empty() ? "" : ",") + to_string(x);
  return s;
}

/// Runs `body`, mapping library exceptions onto exit codes and one-line
/// `status=... key=value` records on `err`.
template <typename Body>
int guarded(std::ostream& err, const char* command, Body&& body) {
  try {
    return body();
  } catch (const not_positive_error& e) {
    err << "status=not-positive command=" << command << " witness=" << point(e.witness())
        << " value=" << to_string(e.value()) << " message=\"" << e.what() << "\"\n";
    return refuted;
  } catch (const inconclusive_error& e) {
    err << "status=inconclusive command=" << command << " lo=" << to_string(e.lo()) << " hi=" << to_string(e.hi())
        << " message=\"" << e.what() << "\"\n";
    return inconclusive;
  } catch (const std::exception& e) {
    err << "status=error command=" << command << " message=\"" << e.what() << "\"\n";
    return usage;
  }
}

}  // namespace detail

inline PolynomialDocument load_polynomial(const std::string& path) {
  return parse_polynomial(detail::read_file(path));
}

inline int cmd_certify(const CertifyArgs& args, std::ostream& out, std::ostream& err) {
  return detail::guarded(err, "certify", [&] {
    const PolynomialDocument d = load_polynomial(args.input);
    PositivityCertificate cert;
    if (args.method == Method::DegreeRaise) {
      RaiseOptions opts;
      opts.q_start = args.q_start;
      if (args.max_iter) opts.max_doublings = *args.max_iter;
      cert = certify_raise(d.poly, opts);
    } else {
      if (args.q_start) throw std::invalid_argument("--q-start applies to the raise method only");
      NestedOptions opts;
      if (args.max_iter) opts.refine.max_depth = *args.max_iter;
      cert = certify_nested(d.poly, opts);
    }
    const std::string text = to_text(CertificateDocument{cert, version});
    if (args.output.empty()) {
      out << text;
    } else {
      std::ofstream f(args.output, std::ios::binary);
      if (!(f << text)) throw std::runtime_error("cannot write '" + args.output + "'");
    }
    err << "status=certified method=" << to_string(cert.method) << " q1=" << cert.q1 << " q2=" << cert.q2 << '\n';
    return static_cast<int>(ok);
  });
}

inline int cmd_verify(const VerifyArgs& args, std::ostream& out, std::ostream& err) {
  return detail::guarded(err, "verify", [&] {
    const PolynomialDocument d = load_polynomial(args.poly);
    const CertificateDocument c = parse_certificate(detail::read_file(args.cert));
    const VerifyResult r = verify(d.poly, c.cert);
    if (!r) {
      err << "status=invalid reason=\"" << r.reason() << "\"\n";
      return static_cast<int>(refuted);
    }
    out << "valid\n";
    err << "status=valid method=" << to_string(c.cert.method) << " q1=" << c.cert.q1 << " q2=" << c.cert.q2 << '\n';
    return static_cast<int>(ok);
  });
}

/// Prints "lo hi q1 q2". With a target width, degrees double from max(n, 2)
/// until the gamma bound is at most the target.
inline int cmd_enclose_min(const EncloseArgs& args, std::ostream& out, std::ostream& err) {
  return detail::guarded(err, "enclose-min", [&] {
    const PolynomialDocument d = load_polynomial(args.input);
    if (d.variables != 2) throw std::invalid_argument("enclose-min needs a bivariate polynomial");
    auto print = [&](const MinEnclosure& e) {
      out << to_string(e.lo()) << ' ' << to_string(e.hi()) << ' ' << e.q1 << ' ' << e.q2 << '\n';
    };
    if (!args.target_width) {
      if (!args.q1 || !args.q2) throw std::invalid_argument("enclose-min needs --q1 and --q2, or --target-width");
      print(min_enclosure(d.poly, *args.q1, *args.q2));
      return static_cast<int>(ok);
    }
    if (*args.target_width <= 0) throw std::invalid_argument("--target-width must be positive");
    auto [q1, q2] = std::pair<Degree, Degree>{std::max<Degree>(d.poly.degree1(), 2),
                                              std::max<Degree>(d.poly.degree2(), 2)};
    if (args.q1) q1 = *args.q1;
    if (args.q2) q2 = *args.q2;
    const GammaBounds g = gamma_bounds(d.poly);
    for (std::size_t step = 0;; ++step) {
      if (enclosure_bound(g, q1, q2) <= *args.target_width) {
        print(min_enclosure(d.poly, q1, q2));
        return static_cast<int>(ok);
      }
      if (step == args.max_iter) {
        print(min_enclosure(d.poly, q1, q2));
        err << "status=inconclusive command=enclose-min message=\"width target not reached after " << args.max_iter
            << " doublings\"\n";
        return static_cast<int>(inconclusive);
      }
      q1 *= 2;
      q2 *= 2;
    }
  });
}

inline int cmd_eval(const EvalArgs& args, std::ostream& out, std::ostream& err) {
  return detail::guarded(err, "eval", [&] {
    const PolynomialDocument d = load_polynomial(args.input);
    if (args.at.size() != static_cast<std::size_t>(d.variables))
      throw std::invalid_argument("polynomial has " + std::to_string(d.variables) + " variable(s) but --at gave " +
                                  std::to_string(args.at.size()) + " coordinate(s)");
    const Rational v = d.variables == 1 ? d.poly(args.at[0], 0) : d.poly(args.at[0], args.at[1]);
    out << to_string(v) << '\n';
    return static_cast<int>(ok);
  });
}

}  // namespace bernpos::cli
