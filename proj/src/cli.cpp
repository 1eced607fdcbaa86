#include "dirtile/cli.hpp"

#include <optional>
#include <ostream>
#include <random>

#include "CLI11.hpp"
#include "dirtile/alignment.hpp"
#include "dirtile/errors.hpp"
#include "dirtile/io.hpp"
#include "dirtile/mgon.hpp"
#include "dirtile/render.hpp"
#include "dirtile/reversal_closed.hpp"

namespace dirtile {

namespace {

struct Options {
  int m = 0;
  int n = 4;
  std::string code;
  int radius = 2;
  std::string in, out, tau, scheme, target, sigma0 = "e", delta, geometry = "auto";
  bool oracle = false, labels = false, ids = false;
  int lift_repeat = 0, lift_stretch = 0, tracks = 0;
  std::uint64_t seed = 1;
  std::vector<int> edges;
};

void emit(const Options& o, std::ostream& out, const std::string& text) {
  if (o.out.empty() || o.out == "-")
    out << text;
  else
    write_text_file(o.out, text);
}

int cmd_enumerate(const Options& o, std::ostream& out) {
  if (o.m < 3) throw DomainError("--m must be at least 3");
  auto reps = enumerate_representatives(o.m);
  out << "m = " << o.m << ", classes = " << count_isomorphism_classes(o.m) << "\n";
  for (const auto& c : reps) out << c.code().str() << "  orbit " << orbit(c).size() << "\n";
  return kExitOk;
}

void print_subsets(std::ostream& out, const SignCode& delta, const std::vector<ReversalClosedSubset>& subsets) {
  out << delta.str();
  for (const auto& s : subsets) out << "  " << s.str();
  out << "\n";
}

int cmd_reversal_closed(const Options& o, std::ostream& out) {
  std::vector<SignCode> codes;
  if (!o.delta.empty()) {
    codes.push_back(SignCode::parse(o.delta));
  } else {
    if (o.m < 3) throw DomainError("give --delta or --m");
    for (const auto& c : enumerate_representatives(o.m)) codes.push_back(c.code());
  }
  int status = kExitOk;
  for (const auto& delta : codes) {
    check_sides(delta.size());
    auto subsets = enumerate_maximal(delta);
    print_subsets(out, delta, subsets);
    if (o.oracle) {
      if (delta.size() > kBruteForceBound) {
        out << "UNVERIFIED (m > " << kBruteForceBound << ")\n";
      } else if (brute_force_maximal(delta) == subsets) {
        out << "MATCH\n";
      } else {
        out << "MISMATCH\n";
        status = kExitValidation;
      }
    }
    for (const auto& s : subsets) {
      if (o.lift_repeat >= 2) {
        auto l = lift_repeat(s, o.lift_repeat);
        out << "  repeat x" << o.lift_repeat << " " << l.delta.str() << "  " << l.str() << "\n";
      }
      if (o.lift_stretch >= 2) {
        auto l = lift_stretch(s, o.lift_stretch);
        out << "  stretch x" << o.lift_stretch << " " << l.delta.str() << "  " << l.str() << "\n";
      }
    }
  }
  return status;
}

int cmd_build(const Options& o, std::ostream& out) {
  if (o.m < 3) throw DomainError("--m must be at least 3");
  SignCode code = o.code.empty() ? SignCode::all_ones(o.m) : SignCode::parse(o.code);
  if (code.size() != o.m) throw DomainError("--code length differs from --m");
  auto patch = build_reflective(CoxeterParams::make(o.m, o.n), MGonCategory(code), o.radius);
  emit(o, out, patch_to_json(patch));
  return kExitOk;
}

TilingPatch load_patch(const Options& o) {
  if (o.in.empty()) throw DomainError("--in <patch> is required");
  return patch_from_json(read_text_file(o.in));
}

int cmd_align(const Options& o, std::ostream& out, std::ostream& err) {
  TilingPatch patch = load_patch(o);
  if (!o.scheme.empty()) {
    ReflectionScheme s = scheme_from_json(read_text_file(o.scheme));
    EdgeReversal tau = generate_from_scheme(patch, s, DihedralElement::parse(patch.sides(), o.sigma0));
    emit(o, out, reversal_to_json(patch, tau));
    return kExitOk;
  }
  if (o.tau.empty() || o.target.empty()) throw DomainError("align needs --scheme, or --tau with --target");
  EdgeReversal tau = reversal_from_json(read_text_file(o.tau), patch);
  SignCode target = SignCode::parse(o.target);
  try {
    Realignment r = apply_reversal(patch, tau, MGonCategory(target));
    emit(o, out, patch_to_json(r.patch));
    if (!o.out.empty() && o.out != "-")
      for (std::size_t x = 0; x < r.sigma.size(); ++x) out << "tile " << x << " " << r.sigma[x].name() << "\n";
  } catch (const NotRealizableError& e) {
    err << e.what() << "\n";
    return kExitValidation;
  }
  return kExitOk;
}

int cmd_verify(const Options& o, std::ostream& out) {
  TilingPatch patch = load_patch(o);
  int status = kExitOk;
  auto report = validate(patch);
  if (report.ok()) {
    out << "patch OK (" << patch.tiles.size() << " tiles, " << patch.edges.size() << " edges, " << patch.vertices.size()
        << " vertices)\n";
  } else {
    status = kExitValidation;
    for (const auto& v : report.violations) out << v.kind << ": " << v.message << "\n";
  }
  if (o.tau.empty()) return status;
  EdgeReversal tau = reversal_from_json(read_text_file(o.tau), patch);
  std::optional<ReflectionScheme> scheme;
  if (!o.scheme.empty()) {
    scheme = scheme_from_json(read_text_file(o.scheme));
    bool ok = check_phi_generated(patch, tau, *scheme);
    out << (ok ? "phi-generated: yes\n" : "phi-generated: NO\n");
    if (!ok) status = kExitValidation;
  } else {
    auto inf = infer_scheme(patch, tau);
    if (!inf.phi.empty())
      for (std::size_t i = 0; i < inf.phi.size(); ++i) out << "phi_" << i + 1 << " " << inf.phi[i].str() << "\n";
    if (inf.ok()) {
      scheme = inf.scheme;
      out << "scheme: target " << inf.scheme->target.code().str() << ", gamma " << inf.scheme->gamma.str() << "\n";
    } else {
      out << "no scheme: " << inf.message << "\n";
      status = kExitValidation;
    }
  }
  if (o.tracks > 0 && scheme) {
    std::mt19937_64 rng(o.seed);
    SignCode start = tau.tile_tuple(patch, patch.base_tile);
    std::uniform_int_distribution<int> pick(0, static_cast<int>(patch.tiles.size()) - 1);
    int bad = 0;
    for (int x = 0; x < static_cast<int>(patch.tiles.size()); ++x)
      for (int k = 0; k < o.tracks; ++k) {
        int z = pick(rng);
        auto route = random_track(patch, patch.base_tile, z, rng);
        auto rest = random_track(patch, z, x, rng);
        route.insert(route.end(), rest.begin(), rest.end());
        if (start * phi_of_word(scheme->phi, route) != tau.tile_tuple(patch, x)) ++bad;
      }
    out << "track checks: " << bad << " disagreements\n";
    if (bad) status = kExitValidation;
  }
  return status;
}

int cmd_reflect(const Options& o, std::ostream& out) {
  TilingPatch patch = load_patch(o);
  EdgeReversal tau = o.tau.empty() ? EdgeReversal::constant(patch) : reversal_from_json(read_text_file(o.tau), patch);
  if (o.edges.empty()) throw DomainError("--edge is required");
  std::vector<std::vector<int>> geos;
  for (int e : o.edges) {
    geos.push_back(geodesic_through(patch, e));
    out << "geodesic through " << e << ":";
    for (int g : geos.back()) out << " " << g;
    out << "\n";
  }
  auto c = composite_symmetry(patch, tau, geos);
  out << "domain " << domain_size(c.map) << " tiles, psi " << c.psi.str() << ", " << (c.verified ? "holds" : "FAILS") << "\n";
  return c.verified ? kExitOk : kExitValidation;
}

int cmd_render(const Options& o, std::ostream& out) {
  TilingPatch patch = load_patch(o);
  std::optional<EdgeReversal> tau;
  if (!o.tau.empty()) tau = reversal_from_json(read_text_file(o.tau), patch);
  RenderStyle style;
  if (o.geometry == "euclidean")
    style.geometry = Geometry::euclidean;
  else if (o.geometry == "disk")
    style.geometry = Geometry::poincare_disk;
  else if (o.geometry != "auto")
    throw DomainError("--geometry must be auto, euclidean or disk");
  style.show_edge_labels = o.labels;
  style.show_tile_ids = o.ids;
  emit(o, out, render_svg(patch, tau ? &*tau : nullptr, style));
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Directed {m,n} tilings"};
  app.require_subcommand(1);
  Options o;

  auto* enumerate = app.add_subcommand("enumerate", "Isomorphism classes of m-gon categories");
  enumerate->add_option("--m", o.m)->required();

  auto* rc = app.add_subcommand("reversal-closed", "Maximal reversal-closed subsets of D_m");
  rc->add_option("--delta", o.delta, "Sign string such as +-+");
  rc->add_option("--m", o.m, "All canonical codes for this m");
  rc->add_flag("--oracle", o.oracle, "Cross-check against brute force (m <= 8)");
  rc->add_option("--lift-repeat", o.lift_repeat);
  rc->add_option("--lift-stretch", o.lift_stretch);

  auto* build = app.add_subcommand("build", "Reflective patch");
  build->add_option("--m", o.m)->required();
  build->add_option("--n", o.n)->required();
  build->add_option("--code", o.code, "Category code, default all +");
  build->add_option("--radius", o.radius);
  build->add_option("--out", o.out);

  auto* align = app.add_subcommand("align", "Generate an edge reversal from a scheme, or realign a patch");
  align->add_option("--in", o.in)->required();
  align->add_option("--scheme", o.scheme);
  align->add_option("--sigma0", o.sigma0);
  align->add_option("--tau", o.tau);
  align->add_option("--target", o.target);
  align->add_option("--out", o.out);

  auto* verify = app.add_subcommand("verify", "Validate a patch and optionally an edge reversal");
  verify->add_option("--in", o.in)->required();
  verify->add_option("--tau", o.tau);
  verify->add_option("--scheme", o.scheme);
  verify->add_option("--tracks", o.tracks, "Random tracks per tile");
  verify->add_option("--seed", o.seed);

  auto* reflect = app.add_subcommand("reflect", "Composite of geodesic reflections");
  reflect->add_option("--in", o.in)->required();
  reflect->add_option("--tau", o.tau);
  reflect->add_option("--edge", o.edges, "Edge on each geodesic, in order of application")->required();

  auto* render = app.add_subcommand("render", "SVG figure");
  render->add_option("--in", o.in)->required();
  render->add_option("--tau", o.tau);
  render->add_option("--out", o.out);
  render->add_option("--geometry", o.geometry);
  render->add_flag("--labels", o.labels);
  render->add_flag("--ids", o.ids);

  try {
    app.parse(std::vector<std::string>(args.rbegin(), args.rend()));
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (*enumerate) return cmd_enumerate(o, out);
    if (*rc) return cmd_reversal_closed(o, out);
    if (*build) return cmd_build(o, out);
    if (*align) return cmd_align(o, out, err);
    if (*verify) return cmd_verify(o, out);
    if (*reflect) return cmd_reflect(o, out);
    if (*render) return cmd_render(o, out);
  } catch (const SchemeError& e) {
    err << "scheme: " << e.what() << "\n";
    return kExitValidation;
  } catch (const Error& e) {
    err << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace dirtile
