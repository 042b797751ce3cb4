// Command-line surface for the face-structure library: validation, the
// graded calculus, hom enumeration, computad cells, enumeration, canonical
// forms, and the tensor-theory law suite.  One JSON report per run; exit 0
// on success, 1 on a failed check or domain error (with witness), 2 on
// usage or parse errors.

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "ofs/axioms.hpp"
#include "ofs/calculus.hpp"
#include "ofs/canonical.hpp"
#include "ofs/computad.hpp"
#include "ofs/enumerate.hpp"
#include "ofs/gt.hpp"
#include "ofs/io.hpp"
#include "ofs/morphism.hpp"
#include "ofs/structure.hpp"

using json = nlohmann::json;
using namespace ofs;

namespace {

json doc_of(const Ofs& s) { return json::parse(write_structure(s)); }

std::string face_name(const Ofs& s, const FaceId& f) {
  return s.names[f.level][f.index];
}

json witness_json(const Ofs& s, const AxiomWitness& w) {
  json faces = json::array();
  for (const FaceId& f : w.faces) faces.push_back(face_name(s, f));
  return {{"axiom", axiom_name(w.axiom)},
          {"detail", w.detail},
          {"faces", std::move(faces)}};
}

json map_json(const Morphism& m) {
  json out = json::object();
  for (size_t k = 0; k < m.map.size(); ++k)
    for (size_t i = 0; i < m.map[k].size(); ++i)
      out[m.source.names[k][i]] = m.target.names[k][m.map[k][i]];
  return out;
}

int env_budget_faces(int fallback) {
  const char* v = std::getenv("OFS_BUDGET");
  if (!v) return fallback;
  try {
    return std::stoi(v);
  } catch (...) {
    throw OfsError("InvalidInput", "OFS_BUDGET is not an integer");
  }
}

MorphKind kind_of(const std::string& name) {
  if (name == "hyper") return MorphKind::Hypergraph;
  if (name == "monotone") return MorphKind::Monotone;
  if (name == "local") return MorphKind::Local;
  if (name == "iso") return MorphKind::Iso;
  throw CLI::ValidationError("--kind must be hyper|monotone|local|iso");
}

void emit(const json& report) { std::cout << report.dump(2) << "\n"; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"ordered face structures toolkit"};
  app.require_subcommand(1);

  std::string file, file_b, cut_spec, kind_name = "local";
  int level = 0, bound_k = 0, cell_level = 1, dim = 2, max_faces = 7;
  bool interface_ok = false, principal_only = false;
  std::optional<int> budget_opt;

  auto* validate_cmd = app.add_subcommand("validate", "check the six axioms");
  validate_cmd->add_option("file", file)->required();
  validate_cmd->add_flag("--interface", interface_ok,
                         "accept relaxed-top interface documents");

  auto* size_cmd = app.add_subcommand("size", "print the size vector");
  size_cmd->add_option("file", file)->required();

  auto* principal_cmd = app.add_subcommand("principal", "principality test");
  principal_cmd->add_option("file", file)->required();

  auto* cuts_cmd = app.add_subcommand("cuts", "list proper decompositions");
  cuts_cmd->add_option("file", file)->required();

  auto* split_cmd = app.add_subcommand("split", "split along a cut");
  split_cmd->add_option("file", file)->required();
  split_cmd->add_option("--cut", cut_spec, "K:WITNESS, as listed by cuts")
      ->required();

  auto* tensor_cmd = app.add_subcommand("tensor", "glue two structures");
  tensor_cmd->add_option("first", file)->required();
  tensor_cmd->add_option("second", file_b)->required();
  tensor_cmd->add_option("--level", level)->required();

  auto* dom_cmd = app.add_subcommand("dom", "k-domain");
  dom_cmd->add_option("file", file)->required();
  dom_cmd->add_option("-k", bound_k)->required();

  auto* cod_cmd = app.add_subcommand("cod", "k-codomain");
  cod_cmd->add_option("file", file)->required();
  cod_cmd->add_option("-k", bound_k)->required();

  auto* hom_cmd = app.add_subcommand("hom", "enumerate morphisms");
  hom_cmd->add_option("source", file)->required();
  hom_cmd->add_option("target", file_b)->required();
  hom_cmd->add_option("--kind", kind_name, "hyper|monotone|local|iso");

  auto* cells_cmd =
      app.add_subcommand("cells", "cells of the free computad");
  cells_cmd->add_option("file", file)->required();
  cells_cmd->add_option("-n", cell_level)->required();
  cells_cmd->add_option("--budget", budget_opt, "face cap on cell shapes");

  auto* enum_cmd = app.add_subcommand("enumerate", "valid structures");
  enum_cmd->add_option("--dim", dim)->required();
  enum_cmd->add_option("--max-faces", max_faces)->required();
  enum_cmd->add_flag("--principal", principal_only);

  auto* canon_cmd = app.add_subcommand("canon", "canonical form");
  canon_cmd->add_option("file", file)->required();

  std::vector<std::string> gt_files;
  auto* gt_cmd = app.add_subcommand("gtcheck", "tensor-theory law suite");
  gt_cmd->add_option("files", gt_files)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*validate_cmd) {
      Ofs s = read_structure_file(file);
      if (s.relaxed_top && !interface_ok) {
        emit({{"ok", false},
              {"error", "interface document; pass --interface to accept "
                        "relaxed loop-filling at the top dimension"}});
        return 1;
      }
      AxiomReport rep = validate(s);
      json axioms = json::object();
      for (Axiom a : {Axiom::Globularity, Axiom::LocalDiscreteness,
                      Axiom::Strictness, Axiom::Disjointness,
                      Axiom::PencilLinearity, Axiom::LoopFilling})
        axioms[axiom_name(a)] = true;
      json failures = json::array();
      for (const AxiomWitness& w : rep.failures) {
        axioms[axiom_name(w.axiom)] = false;
        failures.push_back(witness_json(s, w));
      }
      emit({{"ok", rep.failures.empty()},
            {"axioms", std::move(axioms)},
            {"failures", std::move(failures)}});
      return rep.failures.empty() ? 0 : 1;
    }
    if (*size_cmd) {
      emit({{"size", size_vector(read_structure_file(file))}});
      return 0;
    }
    if (*principal_cmd) {
      emit({{"principal", is_principal(read_structure_file(file))}});
      return 0;
    }
    if (*cuts_cmd) {
      Ofs s = read_structure_file(file);
      json list = json::array();
      for (const Cut& c : enumerate_cuts(s)) {
        json lower = json::array();
        for (const FaceId& f : c.lower) lower.push_back(face_name(s, f));
        list.push_back({{"level", c.level},
                        {"witness", face_name(s, c.witness)},
                        {"lower", std::move(lower)}});
      }
      emit({{"cuts", std::move(list)}});
      return 0;
    }
    if (*split_cmd) {
      Ofs s = read_structure_file(file);
      auto colon = cut_spec.find(':');
      if (colon == std::string::npos)
        throw CLI::ValidationError("--cut expects K:WITNESS");
      int k = std::stoi(cut_spec.substr(0, colon));
      std::string witness = cut_spec.substr(colon + 1);
      for (const Cut& c : enumerate_cuts(s)) {
        if (c.level != k || face_name(s, c.witness) != witness) continue;
        auto [down, up] = split(s, c);
        emit({{"down", doc_of(down)}, {"up", doc_of(up)}});
        return 0;
      }
      throw OfsError("InvalidCut", "no proper decomposition at " + cut_spec);
    }
    if (*tensor_cmd) {
      TensorResult t =
          tensor(read_structure_file(file), read_structure_file(file_b), level);
      emit(doc_of(t.object));
      return 0;
    }
    if (*dom_cmd || *cod_cmd) {
      Ofs s = read_structure_file(file);
      Interface i = *dom_cmd ? k_domain(s, bound_k) : k_codomain(s, bound_k);
      emit(doc_of(i.structure));
      return 0;
    }
    if (*hom_cmd) {
      Ofs a = read_structure_file(file), b = read_structure_file(file_b);
      std::vector<Morphism> homs = enumerate_homs(a, b, kind_of(kind_name));
      json maps = json::array();
      for (const Morphism& m : homs) maps.push_back(map_json(m));
      emit({{"count", homs.size()}, {"maps", std::move(maps)}});
      return 0;
    }
    if (*cells_cmd) {
      Ofs s = read_structure_file(file);
      Budget budget;
      budget.max_object_faces =
          budget_opt ? *budget_opt : env_budget_faces(budget.max_object_faces);
      std::vector<Cell> cs = cells(s, cell_level, budget);
      json list = json::array();
      for (const Cell& c : cs)
        list.push_back({{"dim", c.shape.dim()},
                        {"faces", c.shape.total_faces()},
                        {"indet", is_indet(c)},
                        {"shape", doc_of(c.shape)},
                        {"map", map_json(c.map)}});
      emit({{"count", cs.size()}, {"cells", std::move(list)}});
      return 0;
    }
    if (*enum_cmd) {
      max_faces = std::min(max_faces, env_budget_faces(max_faces));
      Catalog cat = principal_only ? enumerate_principal(dim, max_faces)
                                   : enumerate_valid(dim, max_faces);
      json counts = json::object();
      for (const auto& [bucket, n] : cat.counts())
        counts[std::to_string(bucket.first) + "," +
               std::to_string(bucket.second)] = n;
      json docs = json::array();
      for (const Ofs& s : cat.all()) docs.push_back(doc_of(s));
      emit({{"total", cat.total()},
            {"counts", std::move(counts)},
            {"structures", std::move(docs)}});
      return 0;
    }
    if (*canon_cmd) {
      emit(doc_of(canonical_form(read_structure_file(file)).structure));
      return 0;
    }
    if (*gt_cmd) {
      json reports = json::array();
      bool all_ok = true;
      std::vector<Ofs> objs;
      for (const std::string& f : gt_files)
        objs.push_back(read_structure_file(f));
      for (size_t i = 0; i < objs.size(); ++i) {
        LawReport rep = check_dc_laws(objs[i]);
        LawReport units = check_unit_laws(objs[i]);
        rep.failures.insert(rep.failures.end(), units.failures.begin(),
                            units.failures.end());
        all_ok = all_ok && rep.ok();
        reports.push_back({{"file", gt_files[i]},
                           {"ok", rep.ok()},
                           {"failures", rep.failures}});
      }
      json pairs = json::array();
      for (const Ofs& a : objs)
        for (const Ofs& b : objs)
          for (int k = 0; k <= std::min(a.dim(), b.dim()); ++k) {
            if (!find_iso(k_codomain(a, k).structure,
                          k_domain(b, k).structure))
              continue;
            LawReport rep = check_dc_of_tensor(a, b, k);
            all_ok = all_ok && rep.ok();
            pairs.push_back({{"level", k},
                             {"ok", rep.ok()},
                             {"failures", rep.failures}});
          }
      emit({{"ok", all_ok},
            {"objects", std::move(reports)},
            {"tensor_pairs", std::move(pairs)}});
      return all_ok ? 0 : 1;
    }
  } catch (const CLI::ValidationError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const OfsError& e) {
    // document problems (JSON or structural) are usage errors; domain
    // errors on well-formed inputs are check failures
    bool usage = e.code == "InvalidInput" || e.code == "DanglingName" ||
                 e.code == "DuplicateName" || e.code == "EmptyDelta" ||
                 e.code == "DeltaMixedEmptyAndReal" ||
                 e.code == "MissingTable" || e.code == "DimensionMismatch";
    emit({{"error", e.code}, {"detail", e.what()}});
    return usage ? 2 : 1;
  }
  return 2;
}
