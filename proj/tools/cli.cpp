#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <array>
#include <atomic>
#include <charconv>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <optional>
#include <ostream>
#include <sstream>
#include <thread>
#include <vector>

#include "semitoric/cartography.hpp"
#include "semitoric/errors.hpp"
#include "semitoric/height.hpp"
#include "semitoric/singularity.hpp"

namespace semitoric::cli {

namespace {

using nlohmann::json;

constexpr const char* kSchema = "semitoric-invariants/1";

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ParamArgs {
  double R1 = 0.0;
  double R2 = 0.0;
  double s1 = 0.0;
  double s2 = 0.0;

  ModelParams make() const { return ModelParams::make(R1, R2, s1, s2); }
};

void add_params(CLI::App* sub, ParamArgs& p) {
  sub->add_option("--R1", p.R1, "weight of the first sphere")->required();
  sub->add_option("--R2", p.R2, "weight of the second sphere")->required();
  sub->add_option("--s1", p.s1, "first coupling in [0,1]")->required();
  sub->add_option("--s2", p.s2, "second coupling in [0,1]")->required();
}

json params_json(const ModelParams& p) {
  return {{"R1", p.R1}, {"R2", p.R2}, {"s1", p.s1}, {"s2", p.s2}};
}

json envelope(const char* command) { return {{"schema", kSchema}, {"command", command}}; }

// Writes to --out when given, otherwise to the default stream.
class Sink {
 public:
  Sink(const std::string& path, std::ostream& fallback) : stream_(&fallback) {
    if (path.empty()) return;
    file_.open(path, std::ios::binary | std::ios::trunc);
    if (!file_) throw IoError("cannot open '" + path + "' for writing");
    stream_ = &file_;
    path_ = path;
  }

  std::ostream& get() { return *stream_; }

  void finish() {
    stream_->flush();
    if (!*stream_) throw IoError("write failed" + (path_.empty() ? "" : " for '" + path_ + "'"));
  }

 private:
  std::ofstream file_;
  std::ostream* stream_;
  std::string path_;
};

std::string join_csv(const std::vector<std::string>& cells) {
  std::string line;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i) line += ',';
    line += cells[i];
  }
  return line + '\n';
}

// ---- classify ----

struct ClassifyArgs {
  ParamArgs p;
  bool as_json = false;
  int grid = 50;
};

int cmd_classify(const ClassifyArgs& a, std::ostream& out, std::ostream& err) {
  const ModelParams params = a.p.make();
  const auto reports = classify_fixed_points(params);
  const SemitoricVerdict verdict = check_semitoric(params, a.grid);
  const double E = discriminant_E(params);

  if (a.as_json) {
    json j = envelope("classify");
    j["params"] = params_json(params);
    j["E"] = E;
    j["n_ff"] = verdict.n_ff ? json(*verdict.n_ff) : json(nullptr);
    j["degenerate"] = verdict.degenerate;
    j["semitoric"] = verdict.is_semitoric;
    j["rank1_margin_max"] = verdict.rank1_margin_min;
    j["rank1_samples"] = verdict.rank1_samples;
    json pts = json::array();
    for (const auto& r : reports) {
      pts.push_back({{"point", to_string(r.point_id)},
                     {"rank", r.rank},
                     {"kind", to_string(r.kind)},
                     {"D_sign", r.D_sign}});
    }
    j["points"] = pts;
    out << j.dump(2) << '\n';
  } else {
    out << "E = " << format_double(E) << '\n';
    out << "n_FF = " << (verdict.n_ff ? std::to_string(*verdict.n_ff) : "degenerate") << '\n';
    for (const auto& r : reports) {
      out << to_string(r.point_id) << ": " << to_string(r.kind) << '\n';
    }
    out << "rank1_margin_max = " << format_double(verdict.rank1_margin_min) << " ("
        << verdict.rank1_samples << " samples)\n";
    out << "semitoric = " << (verdict.is_semitoric ? "yes" : "no") << '\n';
  }
  if (verdict.degenerate) {
    err << "degenerate: E lies in the degeneracy band; the system fails to be semitoric\n";
    return kDegenerate;
  }
  return kOk;
}

// ---- height ----

struct HeightArgs {
  ParamArgs p;
  std::string method = "both";
  double tol = kOracleTolerance;
  bool as_json = false;
};

HeightMethod parse_method(const std::string& s) {
  if (s == "closed") return HeightMethod::closed_form;
  if (s == "quadrature") return HeightMethod::quadrature;
  return HeightMethod::both;
}

int cmd_height(const HeightArgs& a, std::ostream& out) {
  const ModelParams params = a.p.make();
  const HeightInvariant h = compute_height(params, parse_method(a.method), a.tol);
  if (a.as_json) {
    json j = envelope("height");
    j["params"] = params_json(params);
    j["h1"] = h.h1;
    j["h2"] = h.h2;
    j["case"] = to_string(h.case_ns);
    j["method"] = to_string(h.method);
    j["ill_conditioned"] = h.ill_conditioned;
    j["discrepancy"] = h.discrepancy ? json(*h.discrepancy) : json(nullptr);
    out << j.dump(2) << '\n';
    return kOk;
  }
  out << "h1 = " << format_double(h.h1) << '\n';
  out << "h2 = " << format_double(h.h2) << '\n';
  out << "case = " << to_string(h.case_ns) << '\n';
  out << "method = " << to_string(h.method) << '\n';
  if (h.discrepancy) out << "discrepancy = " << format_double(*h.discrepancy) << '\n';
  if (h.ill_conditioned) {
    out << "ill-conditioned: close to E = 0 or to a case-III line; prefer --method quadrature\n";
  }
  return kOk;
}

// ---- polygon ----

struct PolygonArgs {
  ParamArgs p;
  std::string cuts = "++";
  int shear = 0;
  std::string format = "json";
  std::string out_path;
};

std::array<int, 2> parse_cuts(const std::string& s) {
  if (s.size() != 2 || s.find_first_not_of("+-") != std::string::npos) {
    throw DomainError("--cuts takes two characters from {+,-}, e.g. \"+-\"");
  }
  return {s[0] == '+' ? 1 : -1, s[1] == '+' ? 1 : -1};
}

std::string cuts_string(const std::array<int, 2>& c) {
  return std::string(1, c[0] > 0 ? '+' : '-') + (c[1] > 0 ? '+' : '-');
}

int cmd_polygon(const PolygonArgs& a, std::ostream& fallback) {
  const ModelParams params = a.p.make();
  const Polygon poly = act_shear(polygon_representative(params, parse_cuts(a.cuts)), a.shear);
  Sink sink(a.out_path, fallback);
  std::ostream& out = sink.get();
  if (a.format == "csv") {
    out << "index,l,y,L,Y\n";
    for (std::size_t i = 0; i < poly.vertices.size(); ++i) {
      const Point2 v = poly.vertices[i];
      const Point2 u = poly.unscaled(v);
      out << join_csv({std::to_string(i), format_double(v.l), format_double(v.y),
                       format_double(u.l), format_double(u.y)});
    }
  } else {
    json j = envelope("polygon");
    j["params"] = params_json(params);
    j["cuts"] = cuts_string(poly.cuts);
    j["has_cuts"] = poly.has_cuts;
    j["shear"] = poly.shear;
    j["R"] = poly.R;
    j["unit"] = poly.unit;
    json ff = json::array();
    for (double l : poly.ff_l) ff.push_back({{"l", l}, {"L", poly.unscaled({l, 0.0}).l}});
    j["ff"] = ff;
    const auto points = [&](const std::vector<Point2>& pts, bool scaled) {
      json arr = json::array();
      for (const Point2& v : pts) {
        const Point2 w = scaled ? v : poly.unscaled(v);
        arr.push_back({w.l, w.y});
      }
      return arr;
    };
    j["vertices_scaled"] = points(poly.vertices, true);
    j["vertices"] = points(poly.vertices, false);
    j["top_scaled"] = points(poly.top, true);
    j["bottom_scaled"] = points(poly.bottom, true);
    out << j.dump(2) << '\n';
  }
  sink.finish();
  return kOk;
}

// ---- image ----

struct ImageArgs {
  ParamArgs p;
  int samples = 128;
  std::string out_path;
  bool scaled = false;
};

int cmd_image(const ImageArgs& a, std::ostream& fallback) {
  const ModelParams params = a.p.make();
  const ImageBoundary img = image_boundary(params, a.samples);
  const double unit = a.scaled ? params.R1 : 1.0;
  Sink sink(a.out_path, fallback);
  std::ostream& out = sink.get();
  out << (a.scaled ? "kind,L_over_R1,h_min,h_max\n" : "kind,L,h_min,h_max\n");
  for (const auto& s : img.samples) {
    out << join_csv({"envelope", format_double(s.L / unit), format_double(s.h_min),
                     format_double(s.h_max)});
  }
  const auto marker = [&](const std::string& kind, const LabelledValue& v) {
    out << join_csv({kind + "_" + std::string(to_string(v.point)),
                     format_double(v.value.l_val / unit), format_double(v.value.h_val),
                     format_double(v.value.h_val)});
  };
  for (const auto& c : img.corner_values) marker("corner", c);
  for (const auto& f : img.ff_values) marker("ff", f);
  sink.finish();
  return kOk;
}

// ---- sweep ----

struct Axis {
  double start = 0.0;
  double stop = 1.0;
  int count = 101;

  double at(int i) const {
    return i == count - 1 ? stop : start + (stop - start) * i / (count - 1);
  }
};

Axis parse_axis(const std::string& spec, const char* name) {
  Axis axis;
  std::stringstream ss(spec);
  std::string a, b, c;
  if (!std::getline(ss, a, ':') || !std::getline(ss, b, ':') || !std::getline(ss, c) ||
      ss.rdbuf()->in_avail() != 0) {
    throw DomainError(std::string("--") + name + " expects start:stop:count");
  }
  try {
    std::size_t pa = 0, pb = 0, pc = 0;
    axis.start = std::stod(a, &pa);
    axis.stop = std::stod(b, &pb);
    axis.count = std::stoi(c, &pc);
    if (pa != a.size() || pb != b.size() || pc != c.size()) throw std::invalid_argument(name);
  } catch (const std::logic_error&) {
    throw DomainError(std::string("--") + name + ": cannot parse '" + spec + "'");
  }
  if (axis.count < 2) throw DomainError(std::string("--") + name + ": count must be >= 2");
  if (!(axis.start >= 0.0 && axis.start <= 1.0 && axis.stop >= 0.0 && axis.stop <= 1.0)) {
    throw DomainError(std::string("--") + name + ": range must lie in [0,1]");
  }
  return axis;
}

struct SweepArgs {
  double R1 = 0.0;
  double R2 = 0.0;
  std::string quantity = "nff";
  std::string s1_spec = "0:1:101";
  std::string s2_spec = "0:1:101";
  std::string method = "closed";
  double tol = kOracleTolerance;
  bool parallel = false;
  std::string out_path;
};

std::string sweep_header(const std::string& quantity) {
  if (quantity == "E") return "s1,s2,E\n";
  if (quantity == "nff") return "s1,s2,E,n_ff,flag\n";
  return "s1,s2,E,h1,h2,case,flag\n";
}

std::string sweep_row(const std::string& quantity, double R1, double R2, double s1, double s2,
                      HeightMethod method, double tol) {
  const ModelParams params{R1, R2, s1, s2};
  const double E = discriminant_E(params);
  const std::string head = format_double(s1) + "," + format_double(s2) + "," + format_double(E);
  if (quantity == "E") return head + '\n';
  const bool degenerate = std::abs(E) <= degeneracy_band(params);
  if (quantity == "nff") {
    if (degenerate) return head + ",,degenerate\n";
    return head + "," + std::to_string(E < 0.0 ? 2 : 0) + ",ok\n";
  }
  if (degenerate) return head + ",,,,degenerate\n";
  if (E > 0.0) return head + ",,,,no_ff\n";
  try {
    const HeightInvariant h = compute_height(params, method, tol);
    return head + "," + format_double(h.h1) + "," + format_double(h.h2) + "," +
           std::string(to_string(h.case_ns)) + "," + (h.ill_conditioned ? "ill_conditioned" : "ok") +
           '\n';
  } catch (const Error&) {
    return head + ",,,,error\n";
  }
}

int cmd_sweep(const SweepArgs& a, std::ostream& fallback) {
  if (a.quantity != "nff" && a.quantity != "height" && a.quantity != "E") {
    throw DomainError("--quantity must be nff, height or E");
  }
  const Axis ax1 = parse_axis(a.s1_spec, "s1");
  const Axis ax2 = parse_axis(a.s2_spec, "s2");
  ModelParams::make(a.R1, a.R2, 0.5, 0.5);  // radii check
  const HeightMethod method = parse_method(a.method);

  const std::size_t cells = static_cast<std::size_t>(ax1.count) * ax2.count;
  std::vector<std::string> rows(cells);
  std::atomic<std::size_t> next{0};
  const auto work = [&] {
    for (std::size_t i = next++; i < cells; i = next++) {
      const int i1 = static_cast<int>(i / ax2.count);
      const int i2 = static_cast<int>(i % ax2.count);
      rows[i] = sweep_row(a.quantity, a.R1, a.R2, ax1.at(i1), ax2.at(i2), method, a.tol);
    }
  };
  const int threads = a.parallel ? thread_count() : 1;
  std::vector<std::thread> pool;
  for (int t = 1; t < threads; ++t) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();

  Sink sink(a.out_path, fallback);
  std::ostream& out = sink.get();
  out << sweep_header(a.quantity);
  for (const auto& r : rows) out << r;
  sink.finish();
  return kOk;
}

}  // namespace

std::string format_double(double x) {
  if (x == 0.0) x = 0.0;  // no "-0" in the output
  std::array<char, 64> buf{};
  const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), x);
  return std::string(buf.data(), res.ptr);
}

int thread_count() {
  if (const char* env = std::getenv("SEMITORIC_THREADS")) {
    int n = 0;
    const std::string_view s(env);
    const auto res = std::from_chars(s.data(), s.data() + s.size(), n);
    if (res.ec == std::errc() && res.ptr == s.data() + s.size() && n > 0) return n;
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Symplectic invariants of the coupled-spins family on S2 x S2"};
  app.name("semitoric");
  app.require_subcommand(1);

  ClassifyArgs classify;
  auto* c = app.add_subcommand("classify", "rank-0 classification, E, n_FF and semitoricity");
  add_params(c, classify.p);
  c->add_flag("--json", classify.as_json, "emit JSON");
  c->add_option("--grid", classify.grid, "rank-1 verification grid size")
      ->check(CLI::Range(2, 2000));

  HeightArgs height;
  auto* h = app.add_subcommand("height", "height invariant (h1, h2)");
  add_params(h, height.p);
  h->add_option("--method", height.method, "closed, quadrature or both")
      ->check(CLI::IsMember({"closed", "quadrature", "both"}));
  h->add_option("--tol", height.tol, "quadrature tolerance")->check(CLI::PositiveNumber);
  h->add_flag("--json", height.as_json, "emit JSON");

  PolygonArgs polygon;
  auto* p = app.add_subcommand("polygon", "polygon-invariant representative");
  add_params(p, polygon.p);
  p->add_option("--cuts", polygon.cuts, "cut directions, e.g. ++ or +-");
  p->add_option("--shear", polygon.shear, "integer shear applied to the representative");
  p->add_option("--format", polygon.format, "json or csv")
      ->check(CLI::IsMember({"json", "csv"}));
  p->add_option("--out", polygon.out_path, "output file (default stdout)");

  ImageArgs image;
  auto* im = app.add_subcommand("image", "boundary of the momentum-map image as CSV");
  add_params(im, image.p);
  im->add_option("--samples", image.samples, "number of L intervals (>= 16)");
  im->add_option("--out", image.out_path, "output file (default stdout)");
  im->add_flag("--scaled", image.scaled, "report L / R1 instead of L");

  SweepArgs sweep;
  auto* sw = app.add_subcommand("sweep", "grid evaluation over (s1, s2) as CSV");
  sw->add_option("--R1", sweep.R1, "weight of the first sphere")->required();
  sw->add_option("--R2", sweep.R2, "weight of the second sphere")->required();
  sw->add_option("--quantity", sweep.quantity, "nff, height or E")
      ->check(CLI::IsMember({"nff", "height", "E"}));
  sw->add_option("--s1", sweep.s1_spec, "start:stop:count");
  sw->add_option("--s2", sweep.s2_spec, "start:stop:count");
  sw->add_option("--method", sweep.method, "height method: closed, quadrature or both")
      ->check(CLI::IsMember({"closed", "quadrature", "both"}));
  sw->add_option("--tol", sweep.tol, "quadrature tolerance")->check(CLI::PositiveNumber);
  sw->add_flag("--parallel", sweep.parallel, "spread grid cells over SEMITORIC_THREADS workers");
  sw->add_option("--out", sweep.out_path, "output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kBadArgs;
  }

  try {
    if (c->parsed()) return cmd_classify(classify, out, err);
    if (h->parsed()) return cmd_height(height, out);
    if (p->parsed()) return cmd_polygon(polygon, out);
    if (im->parsed()) return cmd_image(image, out);
    return cmd_sweep(sweep, out);
  } catch (const DegenerateError& e) {
    err << e.what() << '\n';
    return kDegenerate;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kBadArgs;
  } catch (const IoError& e) {
    err << "error: " << e.what() << '\n';
    return kIoError;
  } catch (const Error& e) {
    err << "numerical failure: " << e.what() << '\n';
    return 1;
  }
}

}  // namespace semitoric::cli
