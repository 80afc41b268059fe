#include "rotno/cli.hpp"

#include <fstream>
#include <functional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "rotno/errors.hpp"
#include "rotno/examples.hpp"
#include "rotno/family.hpp"
#include "rotno/farey.hpp"
#include "rotno/map_io.hpp"
#include "rotno/rotation.hpp"

namespace rotno::cli {

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  parts.push_back(cur);
  return parts;
}

ScanAxis parse_axis(const std::string& text) {
  const auto eq = text.find('=');
  if (eq == std::string::npos) {
    throw ValidationError("axis must look like point=v1,v2,...: '" + text + "'");
  }
  ScanAxis axis;
  axis.gap_point = Rational::parse(text.substr(0, eq));
  for (const auto& tok : split(text.substr(eq + 1), ',')) {
    if (tok.empty()) throw ValidationError("empty sample in axis '" + text + "'");
    axis.samples.push_back(Rational::parse(tok));
  }
  return axis;
}

void print_rotation(std::ostream& out, const RotationResult& r) {
  if (r.exact()) {
    out << "exact " << r.value.str() << "\n";
  } else {
    out << "interval [" << r.bounds.first.str() << ", " << r.bounds.second.str()
        << "] n=" << r.iterations << "\n";
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"exact rotation-number analysis of circle-map lifts with jumps"};
  app.require_subcommand(1);
  int exit_code = kOk;

  // rot <map> [--start p/q] [--max-iter N]
  {
    auto* c = app.add_subcommand("rot", "rotation number of a map file");
    auto map = std::make_shared<std::string>();
    auto start = std::make_shared<std::string>("0");
    auto budget = std::make_shared<RotationBudget>();
    c->add_option("map", *map, "map JSON file")->required();
    c->add_option("--start", *start, "starting point p/q (default 0)");
    c->add_option("--max-iter", budget->max_iter, "iteration budget");
    c->add_option("--max-den-bits", budget->max_den_bits, "denominator bit bound");
    c->callback([=, &out]() {
      print_rotation(out, rotation_number(read_map_file(*map), Rational::parse(*start), *budget));
    });
  }

  // limits <map> --side left|right --out <file>
  {
    auto* c = app.add_subcommand("limits", "write the one-sided limit map");
    auto map = std::make_shared<std::string>();
    auto side = std::make_shared<std::string>();
    auto out_path = std::make_shared<std::string>();
    c->add_option("map", *map)->required();
    c->add_option("--side", *side)->required()->check(CLI::IsMember({"left", "right"}));
    c->add_option("--out", *out_path)->required();
    c->callback([=]() {
      const Lift L = read_map_file(*map);
      write_map_file(*out_path, *side == "left" ? L.left_map() : L.right_map());
    });
  }

  // gaps <map>
  {
    auto* c = app.add_subcommand("gaps", "list jump points and value intervals");
    auto map = std::make_shared<std::string>();
    c->add_option("map", *map)->required();
    c->callback([=, &out]() {
      for (const auto& g : read_map_file(*map).discontinuities()) {
        out << g.point.str() << ": [" << g.lo.str() << ", " << g.hi.str() << "] value "
            << g.current.str() << "\n";
      }
    });
  }

  // sset --lo p/q --hi p/q
  {
    auto* c = app.add_subcommand("sset", "candidate rotation numbers between two one-sided values");
    auto lo = std::make_shared<std::string>();
    auto hi = std::make_shared<std::string>();
    c->add_option("--lo", *lo)->required();
    c->add_option("--hi", *hi)->required();
    c->callback([=, &out]() {
      const FractionSet s = sset(Rational::parse(*lo), Rational::parse(*hi));
      for (const auto& v : s.elements()) out << v.str() << "\n";
    });
  }

  // farey-check p0/q0 p1/q1
  {
    auto* c = app.add_subcommand("farey-check", "test the paired-fraction relation");
    auto nu0 = std::make_shared<std::string>();
    auto nu1 = std::make_shared<std::string>();
    c->add_option("nu0", *nu0)->required();
    c->add_option("nu1", *nu1)->required();
    c->callback([=, &out]() {
      out << (check_pair(Rational::parse(*nu0), Rational::parse(*nu1)) ? "true" : "false")
          << "\n";
    });
  }

  // excluded --lo p/q --hi p/q
  {
    auto* c = app.add_subcommand("excluded", "odd-denominator center excluded between two values");
    auto lo = std::make_shared<std::string>();
    auto hi = std::make_shared<std::string>();
    c->add_option("--lo", *lo)->required();
    c->add_option("--hi", *hi)->required();
    c->callback([=, &out]() {
      const auto center = excluded_center(Rational::parse(*lo), Rational::parse(*hi));
      out << (center ? center->str() : "none") << "\n";
    });
  }

  // vset <map> [--depth K] [--cap M]
  {
    auto* c = app.add_subcommand("vset", "rotation numbers over all gap assignments");
    auto map = std::make_shared<std::string>();
    auto opt = std::make_shared<VsetOptions>();
    c->add_option("map", *map)->required();
    c->add_option("--depth", opt->depth, "backward-orbit depth of the value grid");
    c->add_option("--cap", opt->max_assignments, "assignment budget");
    c->add_option("--max-iter", opt->budget.max_iter, "iteration budget per assignment");
    c->callback([=, &out]() {
      const FractionSet values = vset(read_map_file(*map), *opt);
      for (const auto& v : values.elements()) out << v.str() << "\n";
    });
  }

  // scan <map> --axis point=list [--axis ...] --out <csv>
  {
    auto* c = app.add_subcommand("scan", "rotation numbers on a grid of gap values, as CSV");
    auto map = std::make_shared<std::string>();
    auto axis_args = std::make_shared<std::vector<std::string>>();
    auto out_path = std::make_shared<std::string>();
    auto budget = std::make_shared<RotationBudget>();
    c->add_option("map", *map)->required();
    c->add_option("--axis", *axis_args, "gap point and samples, point=v1,v2,...")->required();
    c->add_option("--out", *out_path)->required();
    c->add_option("--max-iter", budget->max_iter, "iteration budget per cell");
    c->callback([=]() {
      std::vector<ScanAxis> axes;
      axes.reserve(axis_args->size());
      for (const auto& arg : *axis_args) axes.push_back(parse_axis(arg));
      const auto rows = scan_family(read_map_file(*map), axes, *budget);
      std::ofstream os(*out_path);
      if (!os) throw ValidationError("cannot open '" + *out_path + "' for writing");
      write_scan_csv(os, rows, axes.size());
    });
  }

  // embed <low> <high> [--max-k K]
  {
    auto* c = app.add_subcommand("embed", "check the periodic-orbit embedding relation");
    auto low = std::make_shared<std::string>();
    auto high = std::make_shared<std::string>();
    auto max_k = std::make_shared<long>(100);
    c->add_option("low", *low)->required();
    c->add_option("high", *high)->required();
    c->add_option("--max-k", *max_k, "iterates to check");
    c->callback([=, &out]() {
      const auto rep = verify_embedding(read_map_file(*low), read_map_file(*high), *max_k);
      if (!rep.applicable) {
        out << rep.reason << "\n";
        return;
      }
      out << "nu(low) = " << rep.nu_low.str() << ", nu(high) = " << rep.nu_high.str() << "\n";
      out << "common point: " << rep.x0.str() << "\n";
      for (const auto& dir : rep.directions) {
        out << "relation: " << dir.relation << "\n";
        for (const auto& ch : dir.checks) {
          out << "k=" << ch.k << ": " << ch.iterate.str() << " == " << ch.enumerated.str()
              << (ch.ok ? " ok" : " MISMATCH") << "\n";
        }
      }
      out << (rep.passed ? "PASS" : "FAIL") << "\n";
    });
  }

  // tune <map> --target p/q --delta p/q [--tol p/q] [--max-bisect N] --out <file>
  {
    auto* c = app.add_subcommand("tune", "homeomorphism nearby with a prescribed rotation number");
    auto map = std::make_shared<std::string>();
    auto target = std::make_shared<std::string>();
    auto delta = std::make_shared<std::string>();
    auto tol = std::make_shared<std::string>("1/1000000");
    auto max_bisect = std::make_shared<long>(128);
    auto out_path = std::make_shared<std::string>();
    c->add_option("map", *map)->required();
    c->add_option("--target", *target)->required();
    c->add_option("--delta", *delta)->required();
    c->add_option("--tol", *tol, "bracket width fallback");
    c->add_option("--max-bisect", *max_bisect);
    c->add_option("--out", *out_path)->required();
    c->callback([=, &out, &err, &exit_code]() {
      const TuneResult t = tune_lambda(read_map_file(*map), Rational::parse(*target),
                                       Rational::parse(*delta), Rational::parse(*tol),
                                       *max_bisect);
      write_map_file(*out_path, t.lift);
      if (t.success) {
        out << "exact " << t.achieved.value.str() << " lambda=" << t.lambda.str() << "\n";
      } else {
        err << "tune: " << t.diagnostic << "\n";
        exit_code = kBudget;
      }
    });
  }

  // example <name> [--alpha p/q --beta p/q] --out <file>
  {
    auto* c = app.add_subcommand("example", "write a built-in fixture as a map file");
    auto name = std::make_shared<std::string>();
    auto alpha = std::make_shared<std::string>("0");
    auto beta = std::make_shared<std::string>("0");
    auto out_path = std::make_shared<std::string>();
    c->add_option("name", *name)->required()->check(CLI::IsMember(example_names()));
    c->add_option("--alpha", *alpha, "ex4_f parameter in [0,1]");
    c->add_option("--beta", *beta, "ex4_f parameter in [0,1]");
    c->add_option("--out", *out_path)->required();
    c->callback([=]() {
      const Lift L = (*name == "ex4_f")
                         ? example_ex4(Rational::parse(*alpha), Rational::parse(*beta))
                         : example_lift(*name);
      write_map_file(*out_path, L);
    });
  }

  std::vector<const char*> argv;
  argv.push_back("rotno");
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  } catch (const BudgetError& e) {
    err << "error: " << e.what() << "\n";
    return kBudget;
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << "\n";
    return kValidation;
  }
  return exit_code;
}

}  // namespace rotno::cli
