// bridgecert: bridge diagrams and local-minimality certificates from plat
// presentations.

#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "bridge/certificate.hpp"
#include "bridge/curve_engine.hpp"
#include "bridge/diagram.hpp"
#include "bridge/error.hpp"
#include "bridge/morse.hpp"
#include "bridge/render.hpp"

namespace fs = std::filesystem;
using namespace bridge;

namespace {

constexpr int exit_input_error = 2;

struct Globals {
  bool json = false;
  std::string out;
};

void emit(const Globals& g, const std::string& text) {
  if (g.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(g.out, std::ios::binary);
  if (!f)
    throw bridge_error(errc::malformed, "cannot write " + g.out);
  f << text;
}

std::string slurp(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f)
    throw bridge_error(errc::malformed, "cannot read " + path);
  std::ostringstream s;
  s << f.rdbuf();
  return s.str();
}

// A plat file, or a normal-form file when the document carries "format".
ArcSystem load_arcs(const std::string& path, std::size_t* snapshot) {
  std::string text = slurp(path);
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw bridge_error(errc::malformed, std::string("invalid JSON: ") + e.what());
  }
  if (doc.is_object() && doc.contains("format"))
    return arc_system_from_json(doc);
  PlatWord plat = parse_plat(text);
  if (snapshot) {
    if (*snapshot > plat.letters.size())
      throw bridge_error(errc::index_out_of_range,
                         "snapshot " + std::to_string(*snapshot) + " beyond " + std::to_string(plat.letters.size()));
    plat = split(plat, *snapshot).first;
  }
  return build_bridge_diagram(plat).upper();
}

int cmd_validate(const Globals& g, const std::string& path) {
  std::string text = slurp(path);
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw bridge_error(errc::malformed, std::string("invalid JSON: ") + e.what());
  }
  nlohmann::json out;
  if (doc.is_object() && doc.contains("format")) {
    ArcSystem a = arc_system_from_json(doc);
    out = {{"kind", "normal-form"}, {"n", a.n()}, {"intersection_number", intersection_number(a)},
           {"reduced", is_reduced(a)}};
  } else {
    PlatWord p = parse_plat(text);
    out = {{"kind", "plat"},
           {"n", p.n},
           {"letters", p.letters.size()},
           {"components", closure_components(p)}};
  }
  if (g.json) {
    emit(g, out.dump(2) + "\n");
  } else {
    std::ostringstream s;
    s << "ok: " << out["kind"].get<std::string>() << ", n=" << out["n"];
    for (auto& [key, value] : out.items())
      if (key != "kind" && key != "n")
        s << ", " << key << "=" << value;
    s << "\n";
    emit(g, s.str());
  }
  return 0;
}

int cmd_build(const Globals& g, const std::string& path) {
  emit(g, to_json(load_arcs(path, nullptr)).dump(2) + "\n");
  return 0;
}

int cmd_snapshots(const Globals& g, const std::string& path, bool svg) {
  PlatWord plat = read_plat_file(path);
  fs::path dir = g.out.empty() ? fs::path("snapshots") : fs::path(g.out);
  fs::create_directories(dir);
  auto snaps = sweep_snapshots(plat);
  for (std::size_t k = 0; k < snaps.size(); ++k) {
    std::ostringstream name;
    name << "S_" << std::setw(2) << std::setfill('0') << k;
    std::ofstream(dir / (name.str() + ".json"), std::ios::binary) << to_json(snaps[k]).dump(2) << "\n";
    if (svg) {
      RenderOptions opt;
      opt.title = (plat.name.empty() ? std::string("plat") : plat.name) + " S_" + std::to_string(k);
      std::ofstream(dir / (name.str() + ".svg"), std::ios::binary) << render_svg(snaps[k], opt);
    }
  }
  std::cout << "wrote " << snaps.size() << " snapshots to " << dir.string() << "\n";
  return 0;
}

int cmd_check(const Globals& g, const std::string& path) {
  BridgeDiagram d(load_arcs(path, nullptr));
  WellMixedReport r = check_all(d);
  if (g.json) {
    emit(g, to_json(r).dump(2) + "\n");
    return 0;
  }
  std::ostringstream s;
  s << "key        members  status  missing\n";
  for (const KeyResult& k : r.keys) {
    std::ostringstream key;
    key << "(" << k.key.i << "," << k.key.j << "," << to_char(k.key.side) << ")";
    s << std::left << std::setw(11) << key.str() << std::setw(9) << k.family_size << std::setw(8)
      << (k.check.satisfied ? "ok" : "FAIL");
    for (auto [a, b] : k.check.missing)
      s << "{" << a << "," << b << "} ";
    s << "\n";
  }
  s << "well-mixed: " << (r.overall ? "yes" : "no") << "\n";
  emit(g, s.str());
  return 0;
}

int cmd_certify(const Globals& g, const std::string& path) {
  PlatWord plat = read_plat_file(path);
  Certificate c = certify(build_bridge_diagram(plat));
  emit(g, g.json ? to_json(c).dump(2) + "\n" : describe(c));
  return c.locally_minimal ? 0 : 1;
}

int cmd_witness(const Globals& g, const std::string& path) {
  BridgeDiagram d(load_arcs(path, nullptr));
  std::optional<Distance2Witness> w = find_witness(d);
  if (g.json) {
    emit(g, (w ? to_json(*w) : nlohmann::json(nullptr)).dump(2) + "\n");
  } else if (w) {
    std::ostringstream s;
    s << "k=" << w->gap << " r=" << w->upper_label << " s=" << w->lower_label << ": loop around p"
      << w->encircled_first << ", p" << w->encircled_second << "\n";
    emit(g, s.str());
  } else {
    emit(g, "no witness\n");
  }
  return w ? 0 : 1;
}

int cmd_width(const Globals& g, const std::string& text) {
  MorseWord w = parse_morse(text);
  const int wd = width(w);
  std::vector<LevelKind> kinds = classify_levels(w);
  if (g.json) {
    nlohmann::json levels = nlohmann::json::array();
    for (LevelKind k : kinds)
      levels.push_back(to_string(k));
    emit(g, nlohmann::json{{"word", text},
                           {"width", wd},
                           {"level_counts", level_counts(w)},
                           {"levels", levels},
                           {"bridge_position", is_bridge_position(w)}}
                    .dump(2) +
                "\n");
    return 0;
  }
  std::ostringstream s;
  s << "width " << wd << "\nlevels";
  for (LevelKind k : kinds)
    s << " " << to_string(k);
  s << "\nbridge position: " << (is_bridge_position(w) ? "yes" : "no") << "\n";
  emit(g, s.str());
  return 0;
}

int cmd_render(const Globals& g, const std::string& path, std::optional<std::size_t> snapshot) {
  std::size_t k = snapshot.value_or(0);
  ArcSystem a = load_arcs(path, snapshot ? &k : nullptr);
  RenderOptions opt;
  opt.title = fs::path(path).stem().string() + (snapshot ? " S_" + std::to_string(k) : std::string());
  emit(g, render_svg(a, opt));
  return 0;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Bridge diagrams and local-minimality certificates for plat presentations"};
  app.name("bridgecert");
  Globals g;
  app.add_flag("--json", g.json, "Machine-readable output");
  app.add_option("--out", g.out, "Write output to this path (a directory for snapshots)");
  app.require_subcommand(1);

  std::string path, word;
  bool svg = false;
  std::optional<std::size_t> snapshot;

  auto* validate = app.add_subcommand("validate", "Check a plat or normal-form file");
  validate->add_option("file", path)->required();
  auto* build = app.add_subcommand("build", "Write the bridge diagram normal form");
  build->add_option("file", path)->required();
  auto* snaps = app.add_subcommand("snapshots", "Write one normal form per sphere level");
  snaps->add_option("file", path)->required();
  snaps->add_flag("--svg", svg, "Also render each level");
  auto* check = app.add_subcommand("check", "Evaluate the well-mixed condition");
  check->add_option("file", path)->required();
  auto* cert = app.add_subcommand("certify", "Certify local minimality; exit 0 iff certified");
  cert->add_option("file", path)->required();
  auto* wit = app.add_subcommand("witness", "Search for a distance-2 witness");
  wit->add_option("file", path)->required();
  auto* wid = app.add_subcommand("width", "Width of a Morse word such as vvv^^^ (bottom-up)");
  wid->add_option("word", word)->required();
  auto* render = app.add_subcommand("render", "Render a diagram as SVG");
  render->add_option("file", path)->required();
  render->add_option("--snapshot", snapshot, "Sphere level to draw (plat input only)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::string what = e.what();
    for (int k = 1; k < argc; ++k) {
      std::string arg = argv[k];
      if (arg.rfind("-", 0) == 0) {
        k += arg == "--out" ? 1 : 0;
        continue;
      }
      if (app.get_subcommands([&](CLI::App* sub) { return sub->get_name() == arg; }).empty())
        what = "unknown command '" + arg + "'";
      break;
    }
    std::cerr << "bridgecert: " << what << "\n\n" << app.help();
    return exit_input_error;
  }

  try {
    if (*validate)
      return cmd_validate(g, path);
    if (*build)
      return cmd_build(g, path);
    if (*snaps)
      return cmd_snapshots(g, path, svg);
    if (*check)
      return cmd_check(g, path);
    if (*cert)
      return cmd_certify(g, path);
    if (*wit)
      return cmd_witness(g, path);
    if (*wid)
      return cmd_width(g, word);
    if (*render)
      return cmd_render(g, path, snapshot);
  } catch (const bridge_error& e) {
    std::cerr << "bridgecert: " << to_string(e.code()) << ": " << e.what() << "\n";
    return exit_input_error;
  } catch (const std::exception& e) {
    std::cerr << "bridgecert: " << e.what() << "\n";
    return exit_input_error;
  }
  return exit_input_error;
}
