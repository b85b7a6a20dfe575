#include "tricover/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>

#include "tricover/census.hpp"
#include "tricover/cheeger.hpp"
#include "tricover/cocycle.hpp"
#include "tricover/cover.hpp"
#include "tricover/group.hpp"
#include "tricover/homology.hpp"
#include "tricover/io.hpp"
#include "tricover/normal.hpp"
#include "tricover/smith.hpp"
#include "tricover/splitting.hpp"

namespace tricover::cli {

Record& Record::add(std::string key, std::string value) {
  fields.emplace_back(std::move(key), std::move(value));
  return *this;
}

const std::string* Record::get(const std::string& key) const {
  for (const auto& [k, v] : fields)
    if (k == key) return &v;
  return nullptr;
}

namespace {

std::string quote(const std::string& v) {
  if (!v.empty() && v.find_first_of(" \t\"=\\") == std::string::npos) return v;
  std::string out = "\"";
  for (char ch : v) {
    if (ch == '"' || ch == '\\') out += '\\';
    out += ch;
  }
  return out + "\"";
}

}  // namespace

void render(std::ostream& out, const std::vector<Record>& records, Format format) {
  if (format == Format::Records) {
    for (const Record& r : records) {
      out << r.kind;
      for (const auto& [k, v] : r.fields) out << ' ' << k << '=' << quote(v);
      out << '\n';
    }
    return;
  }
  std::size_t i = 0;
  while (i < records.size()) {
    std::size_t j = i;
    while (j < records.size() && records[j].kind == records[i].kind) ++j;
    if (j - i == 1) {
      const Record& r = records[i];
      std::size_t w = 0;
      for (const auto& f : r.fields) w = std::max(w, f.first.size());
      out << r.kind << '\n';
      for (const auto& [k, v] : r.fields) out << "  " << std::left << std::setw(static_cast<int>(w)) << k << "  " << v << '\n';
    } else {
      // table over the union of keys, in first-seen order
      std::vector<std::string> keys;
      for (std::size_t r = i; r < j; ++r)
        for (const auto& f : records[r].fields)
          if (std::find(keys.begin(), keys.end(), f.first) == keys.end()) keys.push_back(f.first);
      std::vector<std::size_t> width(keys.size());
      for (std::size_t k = 0; k < keys.size(); ++k) {
        width[k] = keys[k].size();
        for (std::size_t r = i; r < j; ++r)
          if (const std::string* v = records[r].get(keys[k])) width[k] = std::max(width[k], v->size());
      }
      out << records[i].kind << '\n';
      auto row = [&](auto cell) {
        std::ostringstream line;
        line << ' ';
        for (std::size_t k = 0; k < keys.size(); ++k) line << ' ' << std::left << std::setw(static_cast<int>(width[k])) << cell(k);
        std::string text = line.str();
        text.erase(text.find_last_not_of(' ') + 1);
        out << text << '\n';
      };
      row([&](std::size_t k) { return keys[k]; });
      for (std::size_t r = i; r < j; ++r) {
        row([&](std::size_t k) {
          const std::string* v = records[r].get(keys[k]);
          return v ? *v : std::string("-");
        });
      }
    }
    i = j;
  }
}

namespace {

std::string yes(bool b) { return b ? "yes" : "no"; }

template <class T>
std::string join(const std::vector<T>& xs, const char* sep = ",") {
  std::ostringstream os;
  for (std::size_t i = 0; i < xs.size(); ++i) os << (i ? sep : "") << xs[i];
  return xs.empty() ? "none" : os.str();
}

std::string real(double x) {
  std::ostringstream os;
  os << std::setprecision(10) << x;
  return os.str();
}

/// Input that failed validation; exit code 1.
class InputFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Internal invariant violation detected by a report; exit code 2.
class InvariantFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string format = "human";
  std::string out;
  std::size_t limit = kDefaultExactLimit;
  std::size_t cap = kDefaultSupportCap;
  bool force = false;

  std::string triangulation;
  std::string quotient;
  std::string graph;
  std::string cocycle;
  std::string labels;
  std::string graph_out;
  std::string degrees = "2..8";
  std::size_t index = 0;
  std::vector<std::string> profiles;
  std::string profile_file;
  std::vector<std::int64_t> pigeonhole;
};

Triangulation load_triangulation(const std::string& source) {
  if (source.rfind("census:", 0) == 0) return census::by_name(source.substr(7));
  return read_triangulation_file(source);
}

struct Loaded {
  Triangulation base;
  Skeleton skeleton;
  Presentation presentation;
};

Loaded load_base(const std::string& source) {
  Loaded l;
  l.base = load_triangulation(source);
  const ValidationReport vr = validate(l.base);
  if (!vr.ok()) throw InputFailure("triangulation '" + source + "' fails validation");
  l.skeleton = build_skeleton(l.base);
  l.presentation = presentation_from(l.base, l.skeleton);
  return l;
}

std::size_t parse_count(const std::string& s, const std::string& what) {
  std::size_t used = 0;
  unsigned long long v = 0;
  try {
    v = std::stoull(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != s.size() || s.empty() || s[0] == '-') throw InputFailure("bad " + what + " '" + s + "'");
  return static_cast<std::size_t>(v);
}

FiniteQuotient load_quotient(const std::string& source, const Presentation& p) {
  if (source.empty()) throw InputFailure("a quotient is required (--quotient cyclic:<n>[:<k>] or a file)");
  if (source.rfind("cyclic:", 0) == 0) {
    const std::string rest = source.substr(7);
    const auto colon = rest.find(':');
    const std::size_t n = parse_count(rest.substr(0, colon), "cyclic order");
    const std::size_t k = colon == std::string::npos ? 0 : parse_count(rest.substr(colon + 1), "quotient index");
    if (n == 0) throw InputFailure("cyclic order must be positive");
    const auto qs = cyclic_quotients(p, n);
    if (k >= qs.size())
      throw InputFailure("only " + std::to_string(qs.size()) + " surjections onto Z/" + std::to_string(n));
    return qs[k];
  }
  return read_quotient_file(source);
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream f(path);
  if (!f) throw InputFailure("cannot write '" + path + "'");
  f << text;
}

template <class Fn>
std::string to_text(Fn fn) {
  std::ostringstream os;
  fn(os);
  return os.str();
}

Record homology_record(const HomologyProfile& h) {
  Record r{"homology", {}};
  for (int k = 0; k < 4; ++k) r.add("b" + std::to_string(k), std::to_string(h.b(k)));
  r.add("torsion1", join(h.torsion[1]));
  return r;
}

// ---- subcommands ----

int cmd_validate(const Options& o, std::vector<Record>& rec) {
  const Triangulation t = load_triangulation(o.triangulation);
  const ValidationReport vr = validate(t);
  for (const Check& c : vr.checks) {
    Record r{"check", {}};
    r.add("name", c.name).add("passed", yes(c.passed));
    if (!c.detail.empty()) r.add("detail", c.detail);
    if (c.where) r.add("tet", std::to_string(c.where->tet)).add("face", std::to_string(c.where->face));
    rec.push_back(r);
  }
  rec.push_back(Record{"validate", {}}.add("tets", std::to_string(t.size())).add("ok", yes(vr.ok())));
  return vr.ok() ? kExitOk : kExitFailure;
}

int cmd_homology(const Options& o, std::vector<Record>& rec) {
  const Triangulation t = load_triangulation(o.triangulation);
  if (!validate(t).ok()) throw InputFailure("triangulation fails validation");
  const Skeleton s = build_skeleton(t);
  rec.push_back(Record{"skeleton", {}}
                    .add("tets", std::to_string(s.tet_count))
                    .add("faces", std::to_string(s.faces.size()))
                    .add("edges", std::to_string(s.edges.size()))
                    .add("vertices", std::to_string(s.vertices.size()))
                    .add("euler", std::to_string(s.euler_characteristic()))
                    .add("max_valence", std::to_string(max_edge_valence(s))));
  rec.push_back(homology_record(homology(s)));
  return kExitOk;
}

int cmd_presentation(const Options& o, std::vector<Record>& rec) {
  const Loaded l = load_base(o.triangulation);
  const Presentation& p = l.presentation;
  rec.push_back(Record{"presentation", {}}
                    .add("generators", std::to_string(p.generator_count))
                    .add("relators", std::to_string(p.relators.size())));
  for (std::size_t j = 0; j < p.relators.size(); ++j) {
    std::string w;
    for (const Letter& x : p.relators[j]) w += "x" + std::to_string(x.generator) + (x.exponent > 0 ? "+" : "-");
    rec.push_back(Record{"relator", {}}.add("face", std::to_string(j)).add("word", w));
  }
  const AbelianGroup ab = abelianization(p);
  rec.push_back(Record{"abelianization", {}}.add("rank", std::to_string(ab.rank)).add("torsion", join(ab.torsion)));
  return kExitOk;
}

int cmd_cover(const Options& o, std::vector<Record>& rec) {
  const Loaded l = load_base(o.triangulation);
  const FiniteQuotient q = load_quotient(o.quotient, l.presentation);
  const CoverTriangulation c = build_cover(l.base, q);
  const bool valid = validate(c.lifted).ok();
  const Skeleton& s = c.lifted_skeleton;
  rec.push_back(Record{"cover", {}}
                    .add("degree", std::to_string(c.degree()))
                    .add("images", join(q.images))
                    .add("tets", std::to_string(c.lifted.size()))
                    .add("faces", std::to_string(s.faces.size()))
                    .add("edges", std::to_string(s.edges.size()))
                    .add("vertices", std::to_string(s.vertices.size()))
                    .add("euler", std::to_string(s.euler_characteristic()))
                    .add("valid", yes(valid)));
  rec.push_back(homology_record(homology(s)));
  if (!o.out.empty()) write_file(o.out, triangulation_to_string(c.lifted));
  if (!o.labels.empty()) write_file(o.labels, to_text([&](std::ostream& os) { write_lift_labels(os, c); }));
  if (!valid) throw InvariantFailure("lifted triangulation fails validation");
  return kExitOk;
}

struct CutChoice {
  CutCertificate cut;
  std::string method;
};

CutChoice choose_cut(const MultiGraph& g, std::size_t limit) {
  if (g.vertex_count() <= std::min<std::size_t>(limit, 64)) return {cheeger_exact(g, limit), "exact"};
  return {cheeger_sweep(g), "sweep"};
}

Record cut_record(const CutChoice& c, std::size_t vertices) {
  return Record{"cut", {}}
      .add("method", c.method)
      .add("size", std::to_string(c.cut.subset.size()))
      .add("boundary", std::to_string(c.cut.boundary))
      .add("ratio", c.cut.ratio.str())
      .add("optimal", yes(c.cut.optimal))
      .add("threshold", real(certificate_threshold(vertices)))
      .add("threshold_holds", yes(below_certificate_threshold(c.cut.ratio, vertices)))
      .add("subset", join(c.cut.subset));
}

int cmd_cheeger(const Options& o, std::vector<Record>& rec) {
  MultiGraph g;
  if (!o.graph.empty()) {
    std::ifstream f(o.graph);
    if (!f) throw InputFailure("cannot open '" + o.graph + "'");
    g = parse_graph(f);
  } else {
    const Loaded l = load_base(o.triangulation);
    g = cayley_graph(load_quotient(o.quotient, l.presentation));
  }
  std::size_t total = 0;
  for (const GraphEdge& e : g.edges()) total += e.multiplicity;
  rec.push_back(Record{"graph", {}}
                    .add("vertices", std::to_string(g.vertex_count()))
                    .add("edges", std::to_string(total))
                    .add("max_degree", std::to_string(g.max_degree()))
                    .add("loops", yes(g.has_loops()))
                    .add("connected", yes(g.connected())));
  const CutChoice c = choose_cut(g, o.limit);
  rec.push_back(cut_record(c, g.vertex_count()));
  if (g.connected()) {
    const SpectralBrackets b = spectral_brackets(g);
    const double h = c.cut.ratio.value();
    const bool within = b.lower <= h + 1e-9 && (!c.cut.optimal || h <= b.upper + 1e-9);
    rec.push_back(Record{"spectral", {}}
                      .add("lambda2", real(b.lambda2))
                      .add("lower", real(b.lower))
                      .add("upper", real(b.upper))
                      .add("within", yes(within)));
  }
  if (!o.out.empty()) write_file(o.out, to_text([&](std::ostream& os) { write_cut(os, c.cut); }));
  if (!o.graph_out.empty()) write_file(o.graph_out, to_text([&](std::ostream& os) { write_graph(os, g); }));
  return kExitOk;
}

struct Pipeline {
  CoverTriangulation cover;
  CutChoice cut;
  VerificationReport report;
  bool searched = false;
};

Pipeline run_pipeline(const Loaded& l, const FiniteQuotient& q, const Options& o, bool force) {
  Pipeline p{build_cover(l.base, q), {}, {}, false};
  const MultiGraph g = cayley_graph(q);
  if (g.vertex_count() < 2) throw InputFailure("the Cayley graph has a single vertex; no cut exists");
  p.cut = choose_cut(g, o.limit);
  const bool holds = below_certificate_threshold(p.cut.cut.ratio, g.vertex_count());
  if (holds || force) {
    p.report = verify_certificate_implication(p.cover, p.cut.cut, o.cap);
    p.searched = true;
  } else {
    p.report.ratio = p.cut.cut.ratio;
    p.report.threshold = certificate_threshold(g.vertex_count());
    p.report.cut_optimal = p.cut.cut.optimal;
    p.report.b1 = static_cast<std::int64_t>(homology(p.cover.lifted_skeleton).b(1));
  }
  return p;
}

Record certify_record(const Pipeline& p) {
  const VerificationReport& r = p.report;
  return Record{"certify", {}}
      .add("degree", std::to_string(p.cover.degree()))
      .add("method", p.cut.method)
      .add("ratio", r.ratio.str())
      .add("threshold", real(r.threshold))
      .add("threshold_holds", yes(below_certificate_threshold(r.ratio, p.cover.degree())))
      .add("optimal", yes(r.cut_optimal))
      .add("support", std::to_string(cut_edges(p.cover, p.cut.cut).size()))
      .add("found", p.searched ? yes(r.found) : "skipped")
      .add("b1", std::to_string(r.b1))
      .add("verdict", p.searched ? verdict_name(r.verdict) : "SKIPPED");
}

bool violation(const Pipeline& p) { return p.searched && p.report.verdict != Verdict::Agree; }

int cmd_certify(const Options& o, std::vector<Record>& rec) {
  const Loaded l = load_base(o.triangulation);
  const Pipeline p = run_pipeline(l, load_quotient(o.quotient, l.presentation), o, o.force);
  rec.push_back(certify_record(p));
  for (const std::string& w : p.report.warnings) rec.push_back(Record{"warning", {}}.add("message", w));
  if (!p.searched)
    rec.push_back(Record{"warning", {}}.add("message", "threshold not met; search skipped (use --force to override)"));
  if (!o.out.empty() && p.report.certificate)
    write_file(o.out, to_text([&](std::ostream& os) { write_cocycle(os, *p.report.certificate); }));
  return violation(p) ? kExitInvariant : kExitOk;
}

int cmd_surface(const Options& o, std::vector<Record>& rec) {
  const Loaded l = load_base(o.triangulation);
  std::shared_ptr<const Ambient> ambient;
  Cocycle c;
  std::optional<std::int64_t> boundary;
  std::size_t k3 = max_edge_valence(l.skeleton);
  if (!o.cocycle.empty()) {
    ambient = make_ambient(o.quotient.empty() ? l.base : build_cover(l.base, load_quotient(o.quotient, l.presentation)).lifted);
    std::ifstream f(o.cocycle);
    if (!f) throw InputFailure("cannot open '" + o.cocycle + "'");
    c = parse_cocycle(f, ambient->skeleton.edges.size());
  } else {
    const Pipeline p = run_pipeline(l, load_quotient(o.quotient, l.presentation), o, true);
    rec.push_back(certify_record(p));
    if (violation(p)) return kExitInvariant;
    if (!p.report.certificate) {
      rec.push_back(Record{"surface", {}}.add("found", "no"));
      return kExitOk;
    }
    ambient = make_ambient(p.cover.lifted);
    c = *p.report.certificate;
    boundary = p.cut.cut.boundary;
  }
  const NormalSurface s = dual_surface(ambient, c);
  const SurfaceProfile pr = profile(s);
  if (!(rebuild_cocycle(s) == c)) throw InvariantFailure("dual surface does not rebuild its cocycle");
  rec.push_back(Record{"surface", {}}
                    .add("discs", std::to_string(pr.faces))
                    .add("vertices", std::to_string(pr.vertices))
                    .add("edges", std::to_string(pr.edges))
                    .add("faces", std::to_string(pr.faces))
                    .add("euler", std::to_string(pr.euler))
                    .add("components", std::to_string(pr.component_count()))
                    .add("separates", yes(separates(s))));
  for (std::size_t k = 0; k < pr.components.size(); ++k) {
    const ComponentProfile& cp = pr.components[k];
    rec.push_back(Record{"component", {}}
                      .add("index", std::to_string(k))
                      .add("euler", std::to_string(cp.euler))
                      .add("orientable", yes(cp.orientable))
                      .add("genus", std::to_string(cp.genus))
                      .add("discs", std::to_string(cp.faces)));
  }
  const SphereRemoval sr = remove_spheres(s);
  rec.push_back(Record{"spheres", {}}
                    .add("removed", std::to_string(sr.removed))
                    .add("remaining_components", std::to_string(profile(sr.surface).component_count())));
  if (boundary) {
    const CountingReport cr = verify_counting_bounds(s, *boundary, k3);
    for (const BoundCheck& b : cr.checks)
      rec.push_back(Record{"bound", {}}
                        .add("name", b.name)
                        .add("lhs", std::to_string(b.lhs))
                        .add("rhs", std::to_string(b.rhs))
                        .add("holds", yes(b.holds))
                        .add("vacuous", yes(b.vacuous)));
  }
  for (const std::string& w : sr.warnings) rec.push_back(Record{"warning", {}}.add("message", w));
  if (!o.out.empty()) write_file(o.out, to_text([&](std::ostream& os) { write_surface(os, s); }));
  return kExitOk;
}

std::pair<std::size_t, std::size_t> parse_range(const std::string& s) {
  const auto dots = s.find("..");
  if (dots == std::string::npos) {
    const std::size_t n = parse_count(s, "degree");
    return {n, n};
  }
  const std::size_t a = parse_count(s.substr(0, dots), "degree"), b = parse_count(s.substr(dots + 2), "degree");
  if (a == 0 || b < a) throw InputFailure("bad degree range '" + s + "'");
  return {a, b};
}

int cmd_sweep(const Options& o, std::vector<Record>& rec) {
  const Loaded l = load_base(o.triangulation);
  const auto [from, to] = parse_range(o.degrees);
  int code = kExitOk;
  for (std::size_t n = std::max<std::size_t>(from, 2); n <= to; ++n) {
    Record r{"row", {}};
    r.add("degree", std::to_string(n));
    const auto qs = cyclic_quotients(l.presentation, n);
    if (o.index >= qs.size()) {
      r.add("quotient", "none");
      rec.push_back(r);
      continue;
    }
    const Pipeline p = run_pipeline(l, qs[o.index], o, true);
    r.add("quotient", join(qs[o.index].images))
        .add("h", p.cut.cut.ratio.str())
        .add("method", p.cut.method)
        .add("threshold_holds", yes(below_certificate_threshold(p.cut.cut.ratio, n)))
        .add("found", p.searched ? yes(p.report.found) : "skipped")
        .add("b1", std::to_string(p.report.b1))
        .add("verdict", p.searched ? verdict_name(p.report.verdict) : "SKIPPED");
    rec.push_back(r);
    if (violation(p)) code = kExitInvariant;
  }
  return code;
}

int cmd_ledger(const Options& o, std::vector<Record>& rec) {
  std::vector<std::string> lines = o.profiles;
  if (!o.profile_file.empty()) {
    std::ifstream f(o.profile_file);
    if (!f) throw InputFailure("cannot open '" + o.profile_file + "'");
    std::string line;
    while (std::getline(f, line))
      if (!detail::tokenize(line).empty()) lines.push_back(line);
  }
  if (lines.empty() && o.pigeonhole.empty()) throw InputFailure("ledger needs a profile line, --file or --pigeonhole");
  bool ok = true;
  for (const std::string& line : lines) {
    const SplittingProfile p = parse_splitting(line);
    const ExpansionReport e = verify_expansion(p);
    const UnionBoundsReport u = verify_union_bounds(p);
    rec.push_back(Record{"expansion", {}}
                      .add("chiF", std::to_string(p.chi_F))
                      .add("chis", join(p.chis))
                      .add("terms", join(e.term_strings()))
                      .add("ok", yes(e.ok())));
    for (const LedgerCheck& c : e.checks)
      rec.push_back(Record{"check", {}}.add("name", c.name).add("holds", yes(c.holds)).add("detail", c.detail));
    rec.push_back(Record{"union_bounds", {}}
                      .add("sum_abs_chi", std::to_string(u.sum_abs_chi))
                      .add("n_abs_chiF", std::to_string(u.n_abs_chi_F))
                      .add("abs_chiF_squared", std::to_string(u.abs_chi_F_squared))
                      .add("component_bound", std::to_string(u.component_bound))
                      .add("ok", yes(u.ok())));
    ok = ok && e.ok() && u.ok();
  }
  if (!o.pigeonhole.empty()) {
    if (o.pigeonhole.size() != 3) throw InputFailure("--pigeonhole takes m,c,d");
    rec.push_back(Record{"pigeonhole", {}}
                      .add("m", std::to_string(o.pigeonhole[0]))
                      .add("c", std::to_string(o.pigeonhole[1]))
                      .add("d", std::to_string(o.pigeonhole[2]))
                      .add("bound", std::to_string(pigeonhole_bound(o.pigeonhole[0], o.pigeonhole[1], o.pigeonhole[2]))));
  }
  return ok ? kExitOk : kExitFailure;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Finite covers, Cheeger cuts and cocycle certificates for triangulated 3-manifolds", "tricover"};
  app.require_subcommand(1);
  app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"human", "records"}));
  app.add_option("--out", o.out, "Write the primary artifact to this path");
  app.add_option("--limit", o.limit, "Largest graph solved exactly")->check(CLI::PositiveNumber);
  app.add_option("--cap", o.cap, "Largest certificate support searched")->check(CLI::PositiveNumber);
  app.add_flag("--force", o.force, "Search even when the cut is not below the threshold");

  auto tri_arg = [&](CLI::App* s) {
    s->add_option("triangulation", o.triangulation, "Triangulation file or census:<name>")->required();
  };
  auto quotient_opt = [&](CLI::App* s, bool required) {
    auto* opt = s->add_option("--quotient,-q", o.quotient, "Quotient file or cyclic:<n>[:<k>]");
    if (required) opt->required();
  };
  for (const char* name : {"validate", "homology", "presentation"}) tri_arg(app.add_subcommand(name, "")->fallthrough());
  app.get_subcommand("validate")->description("Check gluing consistency, links, orientability");
  app.get_subcommand("homology")->description("Betti numbers and torsion by Smith normal form");
  app.get_subcommand("presentation")->description("Edge-generated presentation of the fundamental group");

  auto* cover = app.add_subcommand("cover", "Build the regular cover of a quotient")->fallthrough();
  tri_arg(cover);
  quotient_opt(cover, true);
  cover->add_option("--labels", o.labels, "Write lift labels to this path");

  auto* cheeger = app.add_subcommand("cheeger", "Cayley graph, Cheeger cut and spectral bounds")->fallthrough();
  cheeger->add_option("triangulation", o.triangulation, "Triangulation file or census:<name>");
  quotient_opt(cheeger, false);
  cheeger->add_option("--graph", o.graph, "Read a graph file instead of building a Cayley graph");
  cheeger->add_option("--graph-out", o.graph_out, "Write the graph to this path");

  auto* certify = app.add_subcommand("certify", "Cover, cut, threshold, certificate and homology cross-check")->fallthrough();
  tri_arg(certify);
  quotient_opt(certify, true);

  auto* surface = app.add_subcommand("surface", "Dual normal surface of a certificate and its profile")->fallthrough();
  tri_arg(surface);
  quotient_opt(surface, false);
  surface->add_option("--cocycle", o.cocycle, "Use this cocycle file instead of searching");

  auto* sweep = app.add_subcommand("sweep", "Run certify over the cyclic quotients of a range of degrees")->fallthrough();
  tri_arg(sweep);
  sweep->add_option("--degrees", o.degrees, "Degree range a..b")->capture_default_str();
  sweep->add_option("--index", o.index, "Which cyclic quotient of each degree")->capture_default_str();

  auto* ledger = app.add_subcommand("ledger", "Splitting arithmetic checks")->fallthrough();
  ledger->add_option("profiles", o.profiles, "Lines of the form 'splitting chiF=<int> chis=<int,...>'");
  ledger->add_option("--file", o.profile_file, "Read profile lines from a file");
  ledger->add_option("--pigeonhole", o.pigeonhole, "m,c,d")->delimiter(',');

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailure;
  }

  const Format format = o.format == "records" ? Format::Records : Format::Human;
  std::vector<Record> rec;
  int code = kExitOk;
  try {
    if (cover->parsed() && o.quotient.empty()) throw InputFailure("--quotient is required");
    if (app.got_subcommand("validate")) code = cmd_validate(o, rec);
    else if (app.got_subcommand("homology")) code = cmd_homology(o, rec);
    else if (app.got_subcommand("presentation")) code = cmd_presentation(o, rec);
    else if (cover->parsed()) code = cmd_cover(o, rec);
    else if (cheeger->parsed()) {
      if (o.graph.empty() && o.triangulation.empty()) throw InputFailure("cheeger needs a triangulation or --graph");
      code = cmd_cheeger(o, rec);
    } else if (certify->parsed()) code = cmd_certify(o, rec);
    else if (surface->parsed()) code = cmd_surface(o, rec);
    else if (sweep->parsed()) code = cmd_sweep(o, rec);
    else if (ledger->parsed()) code = cmd_ledger(o, rec);
  } catch (const FormatError& e) {
    render(out, rec, format);
    err << "error: " << e.what() << '\n';
    return kExitFailure;
  } catch (const InvariantFailure& e) {
    render(out, rec, format);
    err << "invariant violation: " << e.what() << '\n';
    return kExitInvariant;
  } catch (const InputFailure& e) {
    render(out, rec, format);
    err << "error: " << e.what() << '\n';
    return kExitFailure;
  } catch (const std::invalid_argument& e) {
    render(out, rec, format);
    err << "error: " << e.what() << '\n';
    return kExitFailure;
  } catch (const std::out_of_range& e) {
    render(out, rec, format);
    err << "error: " << e.what() << '\n';
    return kExitFailure;
  } catch (const std::length_error& e) {
    render(out, rec, format);
    err << "error: " << e.what() << '\n';
    return kExitFailure;
  } catch (const std::logic_error& e) {
    render(out, rec, format);
    err << "invariant violation: " << e.what() << '\n';
    return kExitInvariant;
  } catch (const std::exception& e) {
    render(out, rec, format);
    err << "error: " << e.what() << '\n';
    return kExitFailure;
  }
  render(out, rec, format);
  if (code == kExitInvariant) err << "invariant violation: see verdict\n";
  return code;
}

}  // namespace tricover::cli
