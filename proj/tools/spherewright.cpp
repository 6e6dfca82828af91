// Command-line front end: build the polyhedral spheres, run the verification
// suite, realize and count triangulations, and convert between the two
// serialization formats.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>
#include <string>

#include <nlohmann/json.hpp>

#include "CLI11.hpp"
#include "spherewright/enumerate.hpp"
#include "spherewright/errors.hpp"
#include "spherewright/io.hpp"
#include "spherewright/verify.hpp"

namespace sw = spherewright;

namespace {

struct Options {
  int n = 1;
  std::string variant = "extended";
  std::string sites = "auto";
  std::string mask;
  std::vector<std::string> lemmas;
  std::string output;
  std::string format = "json";
  std::string report_format = "text";
  std::string input;
  std::uint64_t limit = 4096;
  bool strict_paper = false;
};

sw::Variant parse_variant(const std::string& s) {
  if (s == "literal") return sw::Variant::Literal;
  if (s == "extended") return sw::Variant::Extended;
  throw sw::Error("variant must be 'literal' or 'extended'");
}

sw::DocFormat parse_format(const std::string& s) {
  if (s == "json") return sw::DocFormat::Json;
  if (s == "facets") return sw::DocFormat::Facets;
  throw sw::Error("format must be 'json' or 'facets'");
}

sw::SiteSelection parse_sites(const std::string& s) {
  if (s == "auto") return sw::SiteSelection::auto_sites();
  if (s == "all") return sw::SiteSelection::all_sites();
  std::vector<sw::Site> list;
  std::istringstream in(s);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (item.empty()) continue;
    const auto colon = item.find(':');
    if (colon == std::string::npos) {
      throw sw::Error("sites are 'auto', 'all', or a list like 4:1,6:2");
    }
    try {
      list.push_back({std::stoi(item.substr(0, colon)), std::stoi(item.substr(colon + 1))});
    } catch (const std::logic_error&) {
      throw sw::Error("bad site entry '" + item + "'");
    }
  }
  if (list.empty()) throw sw::Error("empty site list");
  return sw::SiteSelection::explicit_sites(std::move(list));
}

std::set<sw::LemmaId> parse_lemmas(const std::vector<std::string>& names) {
  std::set<sw::LemmaId> out;
  for (const std::string& name : names) {
    const auto id = sw::lemma_from_string(name);
    if (!id) throw sw::Error("unknown check '" + name + "'");
    out.insert(*id);
  }
  return out;
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw sw::Error("cannot open '" + path + "' for writing");
  out << text;
}

bool stated_mismatch_only(const sw::LemmaReport& r) {
  return !r.pass && r.construction_sound &&
         (r.id == sw::LemmaId::L6_BOUNDARY_TRIANGLES ||
          r.id == sw::LemmaId::L7_INTERIOR_EDGES);
}

int run_build(const Options& opt) {
  const auto q =
      sw::build_bipyramid_sphere(opt.n, parse_variant(opt.variant), parse_sites(opt.sites));
  write_output(opt.output, sw::serialize(sw::to_document(q), parse_format(opt.format)));
  return 0;
}

int run_verify(const Options& opt) {
  const sw::Variant variant = parse_variant(opt.variant);
  if (opt.report_format != "text" && opt.report_format != "json") {
    throw sw::Error("verify formats are 'text' or 'json'");
  }
  const auto reports = sw::run_suite(opt.n, variant, parse_lemmas(opt.lemmas));

  if (opt.report_format == "json") {
    std::cout << sw::reports_to_json(reports);
  } else {
    for (const auto& r : reports) {
      const bool finding = stated_mismatch_only(r);
      std::cout << (finding ? "FINDING " + r.str().substr(5) : r.str()) << '\n';
      if (finding || !r.pass) {
        for (std::size_t i = 1; i < r.notes.size(); ++i) {
          std::cout << "    " << r.notes[i] << '\n';
        }
      }
    }
  }
  if (!opt.output.empty()) write_output(opt.output, sw::reports_to_json(reports));

  std::size_t findings = 0, hard_failures = 0;
  for (const auto& r : reports) {
    if (stated_mismatch_only(r)) {
      ++findings;
    } else if (!r.pass || !r.construction_sound) {
      ++hard_failures;
    }
  }
  const std::size_t failing = hard_failures + (opt.strict_paper ? findings : 0);
  std::cout << reports.size() << " checks, " << (reports.size() - findings - hard_failures)
            << " passed, " << findings << " as-stated findings, " << failing
            << (opt.strict_paper ? " failures (strict)" : " failures") << '\n';
  return failing ? 1 : 0;
}

int run_triangulate(const Options& opt) {
  const sw::Variant variant = parse_variant(opt.variant);
  const auto q = sw::build_bipyramid_sphere(opt.n, variant, parse_sites(opt.sites));
  const auto mask = opt.mask.empty() ? sw::TriangulationMask::all_two(q.bipyramids.size())
                                     : sw::TriangulationMask::from_string(opt.mask);
  const auto x = sw::realize(q, mask);
  write_output(opt.output, sw::serialize(sw::to_document(x, q.n, q.variant, q.apex_of),
                                         parse_format(opt.format)));
  return 0;
}

int run_count_distinct(const Options& opt) {
  const sw::Variant variant = parse_variant(opt.variant);
  const auto q = sw::build_bipyramid_sphere(opt.n, variant, parse_sites(opt.sites));
  const auto table = sw::count_distinct_classes(q, opt.limit);

  if (opt.report_format != "text" && opt.report_format != "json") {
    throw sw::Error("count-distinct formats are 'text' or 'json'");
  }
  std::ostringstream os;
  if (opt.report_format == "json") {
    nlohmann::json classes = nlohmann::json::array();
    for (const auto& c : table.classes) {
      nlohmann::json masks = nlohmann::json::array();
      for (const auto& m : c.masks) masks.push_back(m.str());
      classes.push_back({{"size", c.masks.size()}, {"f_vector", c.f.counts}, {"masks", masks}});
    }
    const std::uint64_t masks = std::uint64_t{1} << q.bipyramids.size();
    const nlohmann::json out = {{"n", opt.n},
                                {"variant", sw::to_string(variant)},
                                {"sites", q.sites.size()},
                                {"masks", masks},
                                {"floor_bound",
                                 sw::distinct_floor_bound(masks, q.vertex_set().size())},
                                {"classes", classes}};
    os << out.dump(2) << '\n';
  } else {
    const std::uint64_t masks = std::uint64_t{1} << q.bipyramids.size();
    os << "sites " << q.sites.size() << ", masks " << masks << ", classes "
       << table.class_count() << " (guaranteed floor "
       << sw::distinct_floor_bound(masks, q.vertex_set().size()) << ")\n";
    os << "class size f-vector representative\n";
    for (std::size_t i = 0; i < table.classes.size(); ++i) {
      const auto& c = table.classes[i];
      os << (i + 1) << ' ' << c.masks.size() << ' ' << c.f.str() << ' '
         << c.masks.front().str() << '\n';
    }
  }
  write_output(opt.output, os.str());
  return 0;
}

int run_export(const Options& opt) {
  std::ifstream in(opt.input, std::ios::binary);
  if (!in) throw sw::Error("cannot open '" + opt.input + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  const std::string text = buffer.str();

  // detect the source format by the first non-space character
  const auto pos = text.find_first_not_of(" \t\r\n");
  const sw::DocFormat source = (pos != std::string::npos && text[pos] == '{')
                                   ? sw::DocFormat::Json
                                   : sw::DocFormat::Facets;
  const auto doc = sw::deserialize(text, source);
  write_output(opt.output, sw::serialize(doc, parse_format(opt.format)));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "spherewright: polyhedral 3-spheres with quadratically many bipyramid facets,\n"
      "built combinatorially from the cyclic 4-polytope, verified mechanically, and\n"
      "split into exponentially many distinct triangulations."};
  app.require_subcommand(1);
  Options opt;

  auto add_common = [&opt](CLI::App* cmd, bool with_sites) {
    cmd->add_option("--n", opt.n, "construction size (>= 1)")->required();
    cmd->add_option("--variant", opt.variant, "ball variant: literal or extended")
        ->capture_default_str();
    if (with_sites) {
      cmd->add_option("--sites", opt.sites, "auto, all, or an explicit list like 4:1,6:2")
          ->capture_default_str();
    }
    cmd->add_option("--format", opt.format, "output format: json or facets")
        ->capture_default_str();
    cmd->add_option("-o,--output", opt.output, "output path (default stdout)");
  };

  CLI::App* build = app.add_subcommand("build", "construct the bipyramid sphere");
  add_common(build, true);

  CLI::App* verify = app.add_subcommand("verify", "run the verification suite");
  verify->add_option("--n", opt.n, "construction size (>= 1)")->required();
  verify->add_option("--variant", opt.variant, "ball variant: literal or extended")
      ->capture_default_str();
  verify->add_option("--format", opt.report_format, "report format: text or json")
      ->capture_default_str();
  verify->add_option("-o,--output", opt.output, "also write the JSON report stream here");
  verify->add_option("--lemma", opt.lemmas,
                     "restrict to specific checks (e.g. L7_INTERIOR_EDGES); repeatable");
  verify->add_flag("--strict-paper", opt.strict_paper,
                   "as-stated mismatches of the boundary/interior catalogues fail the run");

  CLI::App* triangulate =
      app.add_subcommand("triangulate", "realize one mask as a simplicial sphere");
  add_common(triangulate, true);
  triangulate->add_option(
      "--mask", opt.mask,
      "one character per site, 0 = equator split, 1 = edge split (default all 0)");

  CLI::App* count =
      app.add_subcommand("count-distinct", "enumerate masks and count isomorphism classes");
  count->add_option("--n", opt.n, "construction size (>= 1)")->required();
  count->add_option("--variant", opt.variant, "ball variant: literal or extended")
      ->capture_default_str();
  count->add_option("--sites", opt.sites, "auto, all, or an explicit list like 4:1,6:2")
      ->capture_default_str();
  count->add_option("--format", opt.report_format, "table format: text or json")
      ->capture_default_str();
  count->add_option("-o,--output", opt.output, "output path (default stdout)");
  count->add_option("--limit", opt.limit, "largest admissible mask count")
      ->capture_default_str();

  CLI::App* exp = app.add_subcommand("export", "convert between the two formats");
  exp->add_option("--input", opt.input, "input path (format auto-detected)")->required();
  exp->add_option("--format", opt.format, "target format: json or facets")
      ->capture_default_str();
  exp->add_option("-o,--output", opt.output, "output path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (build->parsed()) return run_build(opt);
    if (verify->parsed()) return run_verify(opt);
    if (triangulate->parsed()) return run_triangulate(opt);
    if (count->parsed()) return run_count_distinct(opt);
    if (exp->parsed()) return run_export(opt);
  } catch (const sw::SiteRejectedError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}
