#include "corona/cli.hpp"

#include "corona/bruteforce.hpp"
#include "corona/closedform.hpp"
#include "corona/render.hpp"
#include "corona/transfer.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <limits>
#include <set>
#include <sstream>
#include <stdexcept>

namespace corona::cli {

namespace {

using nlohmann::json;

// Raised for bad user input; maps to exit code 2.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct CountSettings {
  bool algebraic = false;
  bool force = false;
  int max_perimeter = 30;
  unsigned threads = 0;
};

std::vector<int> parse_sides(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ',')) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(part, &used);
    } catch (const std::exception&) {
      throw UsageError("invalid side length '" + part + "'");
    }
    if (used != part.size()) throw UsageError("invalid side length '" + part + "'");
    out.push_back(v);
  }
  if (out.empty()) throw UsageError("no side lengths given");
  return out;
}

Shape parse_shape(const std::string& kind_text, const std::string& sides_text) {
  auto kind = parse_shape_kind(kind_text);
  if (!kind) throw UsageError("unknown shape '" + kind_text + "'");
  try {
    return make_shape(*kind, parse_sides(sides_text));
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

Method parse_method(const std::string& s) {
  for (auto m : {Method::closed, Method::transfer, Method::brute})
    if (to_string(m) == s) return m;
  throw UsageError("unknown method '" + s + "'");
}

void check_sides(const Shape& shape, Method method, const CountSettings& settings) {
  const int lowest = (method == Method::closed || (method == Method::transfer && settings.algebraic)) ? 0 : 1;
  for (int s : shape.sides)
    if (s < lowest)
      throw UsageError("side length " + std::to_string(s) + " not allowed for method " + to_string(method) +
                       (method == Method::transfer ? " (use --algebraic for 0)" : ""));
  if (method == Method::brute && !settings.force && shape.perimeter() > settings.max_perimeter)
    throw UsageError("perimeter " + std::to_string(shape.perimeter()) + " exceeds brute-force ceiling " +
                     std::to_string(settings.max_perimeter) + " (use --force)");
}

CountReport from_polynomial(const Polynomial& p) {
  CountReport r;
  for (const auto& [e, c] : p.terms()) r.by_size[e] = c;
  r.total = p.coefficient_sum();
  return r;
}

CountReport compute(const Shape& shape, Method method, const CountSettings& settings) {
  check_sides(shape, method, settings);
  const auto start = std::chrono::steady_clock::now();
  const auto& s = shape.sides;
  CountReport report;

  switch (method) {
    case Method::closed: {
      closedform::CountBreakdown b;
      switch (shape.kind) {
        case ShapeKind::hexagon: b = closedform::hexagon_counts(s[0]); break;
        case ShapeKind::diamond: b = closedform::diamond_counts(s[0]); break;
        case ShapeKind::gen_hexagon: b = closedform::gen_hexagon_counts(s[0], s[1], s[2]); break;
        case ShapeKind::gen_diamond: b = closedform::gen_diamond_counts(s[0], s[1]); break;
      }
      for (std::size_t i = 0; i < 4; ++i) report.by_size[b.sizes[i]] = b.parts[i];
      report.total = b.total;
      report.algebraic_extension = b.algebraic_extension;
      break;
    }
    case Method::transfer: {
      const auto mode = settings.algebraic ? transfer::Mode::algebraic : transfer::Mode::combinatorial;
      Polynomial p;
      switch (shape.kind) {
        case ShapeKind::hexagon: p = transfer::hexagon_trace(s[0], mode); break;
        case ShapeKind::diamond: p = transfer::diamond_trace(s[0], mode); break;
        case ShapeKind::gen_hexagon: p = transfer::gen_hexagon_trace(s[0], s[1], s[2], mode); break;
        case ShapeKind::gen_diamond: p = transfer::gen_diamond_trace(s[0], s[1], mode); break;
      }
      report = from_polynomial(p);
      report.algebraic_extension = std::find(s.begin(), s.end(), 0) != s.end();
      break;
    }
    case Method::brute: {
      const auto hist = enumerate_count_only(build_region(shape), {settings.threads});
      for (const auto& [k, c] : hist.by_size) report.by_size[k] = c;
      report.total = hist.total;
      break;
    }
  }

  report.shape = shape;
  report.method = method;
  report.elapsed_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return report;
}

std::string join_sides(const Shape& shape) {
  std::string out;
  for (int v : shape.declared_sides()) {
    if (!out.empty()) out += ',';
    out += std::to_string(v);
  }
  return out;
}

void print_report(std::ostream& out, const CountReport& r) {
  out << "shape: " << to_string(r.shape.kind) << "\n"
      << "sides: " << join_sides(r.shape) << "\n"
      << "method: " << to_string(r.method) << (r.algebraic_extension ? " (algebraic extension)" : "") << "\n";
  for (const auto& [k, c] : r.by_size) out << "  " << k << " lozenges: " << c << "\n";
  out << "total: " << r.total << "\n";
}

void add_count_flags(CLI::App* cmd, CountSettings& settings) {
  cmd->add_flag("--algebraic", settings.algebraic, "Allow side length 0 for the transfer method");
  cmd->add_flag("--force", settings.force, "Lift the brute-force perimeter ceiling");
  cmd->add_option("--max-perimeter", settings.max_perimeter, "Brute-force perimeter ceiling")->capture_default_str();
  cmd->add_option("--threads", settings.threads, "Brute-force worker threads (0 = all cores)")->capture_default_str();
}

std::vector<std::vector<int>> side_tuples(ShapeKind kind, int max) {
  const std::size_t arity = kind == ShapeKind::gen_hexagon ? 3 : kind == ShapeKind::gen_diamond ? 2 : 1;
  std::vector<std::vector<int>> out;
  std::vector<int> cur(arity, 1);
  while (true) {
    out.push_back(cur);
    std::size_t i = arity;
    while (i > 0 && cur[i - 1] == max) cur[--i] = 1;
    if (i == 0) break;
    ++cur[i - 1];
  }
  return out;
}

}  // namespace

std::string to_string(Method m) {
  switch (m) {
    case Method::closed: return "closed";
    case Method::transfer: return "transfer";
    case Method::brute: return "brute";
  }
  return "?";
}

std::string to_json(const CountReport& report) {
  json j;
  j["shape"] = to_string(report.shape.kind);
  j["sides"] = report.shape.declared_sides();
  j["method"] = to_string(report.method);
  json sizes = json::array(), counts = json::array();
  for (const auto& [k, c] : report.by_size) {
    sizes.push_back(k);
    if (c <= std::numeric_limits<std::uint64_t>::max() && c >= 0)
      counts.push_back(c.convert_to<std::uint64_t>());
    else
      counts.push_back(c.str());
  }
  j["sizes"] = sizes;
  j["counts"] = counts;
  j["total"] = report.total.str();
  j["algebraic_extension"] = report.algebraic_extension;
  j["elapsed_ms"] = report.elapsed_ms;
  return j.dump();
}

std::string describe_mismatch(const std::vector<CountReport>& reports) {
  bool agree = true;
  for (const auto& r : reports)
    if (r.by_size != reports.front().by_size || r.total != reports.front().total) agree = false;
  if (agree) return {};
  std::set<std::uint64_t> keys;
  for (const auto& r : reports)
    for (const auto& [k, c] : r.by_size) keys.insert(k);
  std::ostringstream os;
  for (auto k : keys) {
    os << "  " << k << " lozenges:";
    for (const auto& r : reports) {
      auto it = r.by_size.find(k);
      os << " " << to_string(r.method) << "=" << (it == r.by_size.end() ? BigInt(0) : it->second);
    }
    os << "\n";
  }
  os << "  total:";
  for (const auto& r : reports) os << " " << to_string(r.method) << "=" << r.total;
  os << "\n";
  return os.str();
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact enumeration of lozenge coronas of hexagons and diamonds"};
  app.name("corona");
  app.require_subcommand(1);

  std::string shape_text, sides_text, method_text = "closed", methods_text = "closed,transfer,brute", out_dir;
  bool as_json = false;
  std::size_t terms = 10, limit = std::numeric_limits<std::size_t>::max();
  int max_side = 4;
  CountSettings settings;

  auto* count = app.add_subcommand("count", "Count coronas with one method");
  count->add_option("--shape", shape_text, "hexagon | diamond | gen-hexagon | gen-diamond")->required();
  count->add_option("--sides", sides_text, "Comma-separated side lengths")->required();
  count->add_option("--method", method_text, "closed | transfer | brute")->capture_default_str();
  count->add_flag("--json", as_json, "Emit JSON");
  add_count_flags(count, settings);

  auto* verify = app.add_subcommand("verify", "Run several methods and compare their breakdowns");
  verify->add_option("--shape", shape_text)->required();
  verify->add_option("--sides", sides_text)->required();
  verify->add_option("--methods", methods_text, "Comma-separated methods")->capture_default_str();
  add_count_flags(verify, settings);

  auto* gf = app.add_subcommand("gf", "Expand a generating function");
  gf->add_option("--shape", shape_text, "hexagon | diamond")->required();
  gf->add_option("--terms", terms, "Number of coefficients")->required();

  auto* table = app.add_subcommand("table", "Totals for all side tuples with entries 1..max");
  table->add_option("--shape", shape_text)->required();
  table->add_option("--max", max_side)->required();
  table->add_option("--method", method_text)->capture_default_str();
  table->add_flag("--json", as_json, "Emit JSON");
  add_count_flags(table, settings);

  auto* render = app.add_subcommand("render", "Write SVG files for coronas in canonical order");
  render->add_option("--shape", shape_text)->required();
  render->add_option("--sides", sides_text)->required();
  render->add_option("--out", out_dir, "Output directory")->required();
  render->add_option("--limit", limit, "Write at most this many files");
  add_count_flags(render, settings);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return 0;
    }
    err << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (*count) {
      const auto report = compute(parse_shape(shape_text, sides_text), parse_method(method_text), settings);
      if (as_json)
        out << to_json(report) << "\n";
      else
        print_report(out, report);
      return 0;
    }

    if (*verify) {
      const Shape shape = parse_shape(shape_text, sides_text);
      std::vector<Method> methods;
      std::stringstream ss(methods_text);
      for (std::string m; std::getline(ss, m, ',');) methods.push_back(parse_method(m));
      if (methods.empty()) throw UsageError("no methods given");

      std::vector<CountReport> reports;
      for (auto m : methods) reports.push_back(compute(shape, m, settings));

      for (const auto& r : reports)
        out << to_string(r.method) << ": total " << r.total << " (" << r.elapsed_ms << " ms)\n";
      const std::string diff = describe_mismatch(reports);
      if (diff.empty()) {
        out << "agree\n";
        return 0;
      }
      out << "MISMATCH\n" << diff;
      return 1;
    }

    if (*gf) {
      if (terms < 1) throw UsageError("--terms must be at least 1");
      std::vector<BigInt> series;
      if (shape_text == "hexagon")
        series = closedform::hexagon_gf_series(terms);
      else if (shape_text == "diamond")
        series = closedform::diamond_gf_series(terms);
      else
        throw UsageError("gf supports hexagon and diamond only");
      for (std::size_t i = 0; i < series.size(); ++i) out << (i ? ", " : "") << series[i];
      out << "\n";
      return 0;
    }

    if (*table) {
      auto kind = parse_shape_kind(shape_text);
      if (!kind) throw UsageError("unknown shape '" + shape_text + "'");
      if (max_side < 1) throw UsageError("--max must be at least 1");
      const Method method = parse_method(method_text);
      json rows = json::array();
      for (const auto& tuple : side_tuples(*kind, max_side)) {
        const auto report = compute(make_shape(*kind, tuple), method, settings);
        if (as_json) {
          rows.push_back({{"sides", tuple}, {"total", report.total.str()}});
        } else {
          out << join_sides(report.shape) << "\t" << report.total << "\n";
        }
      }
      if (as_json) out << rows.dump() << "\n";
      return 0;
    }

    if (*render) {
      const Shape shape = parse_shape(shape_text, sides_text);
      check_sides(shape, Method::brute, settings);
      const Region region = build_region(shape);
      std::filesystem::create_directories(out_dir);
      std::size_t index = 0;
      enumerate_coronas(
          region,
          [&](const Corona& c) {
            if (index < limit) {
              const auto path = std::filesystem::path(out_dir) / corona_file_name(shape, index);
              std::ofstream file(path, std::ios::binary);
              if (!file) throw std::runtime_error("cannot write " + path.string());
              file << render_corona(region, c);
            }
            ++index;
          },
          {settings.threads});
      out << "wrote " << std::min(index, limit) << " of " << index << " coronas to " << out_dir << "\n";
      return 0;
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

}  // namespace corona::cli
