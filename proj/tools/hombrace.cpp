// hombrace: verify Hom-associative structures, compute brackets, cohomology and
// deformations from JSON files. Exit codes: 0 pass, 1 fail, 2 input error.

#include <CLI11.hpp>

#include <filesystem>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "hombrace/corpus.hpp"
#include "hombrace/hombrace.hpp"
#include "hombrace/io.hpp"

namespace fs = std::filesystem;
using namespace hombrace;
using io::Json;

namespace {

struct Globals {
  std::string field;
  bool json = false;
  bool force = false;

  std::optional<Field> field_override() const {
    if (field.empty()) return std::nullopt;
    return Field::parse(field);
  }
  Field field_or_q() const { return field.empty() ? Field::rationals() : Field::parse(field); }
};

// Files naming an (A, M) pair: -a is optional when the bimodule references its algebra.
struct PairArgs {
  std::string algebra;
  std::string module;
};

struct Pair {
  HomAlgebra algebra;
  Bimodule module;
};

Pair load_pair(const PairArgs& p, const Globals& g) {
  if (p.module.empty()) throw InputError("a bimodule file (-m) is required");
  const fs::path apath = p.algebra.empty() ? io::referenced_algebra(p.module) : fs::path(p.algebra);
  HomAlgebra a = io::load_algebra(apath, g.field_override());
  Bimodule m = io::load_bimodule(p.module, a);
  return {std::move(a), std::move(m)};
}

Json report_json(const Report& r) {
  Json v = Json::array();
  for (const auto& x : r.violations())
    v.push_back(Json{{"law", x.law}, {"indices", x.indices}, {"defect", io::vector_to_json(x.defect)}});
  return Json{{"ok", r.ok()}, {"violations", v}};
}

int emit(const Report& r, const Globals& g, Json extra = Json::object()) {
  if (g.json) {
    Json out = report_json(r);
    for (auto& [k, v] : extra.items()) out[k] = v;
    std::cout << out.dump() << "\n";
  } else {
    for (auto& [k, v] : extra.items()) std::cout << k << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
    std::cout << (r.ok() ? "PASS\n" : "FAIL\n" + r.to_string());
  }
  return r.ok() ? 0 : 1;
}

Vec parse_vector(const std::string& text, const Field& f, std::size_t n) {
  Vec v;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) v.push_back(f.parse_scalar(item));
  if (v.size() != n) throw InputError("expected " + std::to_string(n) + " comma-separated entries in \"" + text + "\"");
  return v;
}

DeformationSeries load_series(const Pair& p, const std::string& t, const std::vector<std::string>& terms) {
  DeformationSeries s{io::load_map(t, p.algebra.field()), {}};
  for (const auto& path : terms) s.terms.push_back(io::load_map(path, p.algebra.field()));
  return s;
}

void add_pair_options(CLI::App* cmd, PairArgs& p) {
  cmd->add_option("-a,--algebra", p.algebra, "algebra file (default: the one the bimodule references)");
  cmd->add_option("-m,--module", p.module, "bimodule file")->required();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hom-associative algebras, O-operators, their cohomology and deformations"};
  app.require_subcommand(1);
  app.fallthrough();  // global flags may follow the subcommand
  Globals g;
  app.add_option("--field", g.field, "Q or Fp:<p>; overrides the field recorded in algebra files");
  app.add_flag("--json", g.json, "machine-readable output");
  app.add_flag("--force", g.force, "build induced structures without checking the O-operator first");

  std::function<int()> run;
  PairArgs pair;
  std::string t_path, file, file2, out_path, out_dir = ".", x_text, gen1, gen2, which = "T", instance;
  std::vector<std::string> terms;
  bool strict = false, unconstrained = false;
  std::size_t degree = 0;

  // verify
  auto* verify = app.add_subcommand("verify", "check axioms and print every violation");
  verify->require_subcommand(1);
  auto* v_alg = verify->add_subcommand("algebra", "Hom-associativity");
  v_alg->add_option("file", file)->required();
  v_alg->add_flag("--strict", strict, "also require alpha to be multiplicative");
  v_alg->callback([&] {
    run = [&] {
      const HomAlgebra a = io::load_algebra(file, g.field_override());
      return emit(verify_hom_algebra(a, AlgebraChecks{strict}), g);
    };
  });
  auto* v_mod = verify->add_subcommand("bimodule", "bimodule axioms");
  v_mod->add_option("file", pair.module)->required();
  v_mod->add_option("-a,--algebra", pair.algebra);
  v_mod->callback([&] {
    run = [&] {
      const Pair p = load_pair(pair, g);
      return emit(verify_bimodule(p.algebra, p.module), g);
    };
  });
  auto* v_op = verify->add_subcommand("o-operator", "O-operator identity and its equivalent characterizations");
  add_pair_options(v_op, pair);
  v_op->add_option("-t,--operator", t_path)->required();
  v_op->callback([&] {
    run = [&] {
      const Pair p = load_pair(pair, g);
      const Matrix t = io::load_map(t_path, p.algebra.field());
      const Report rep = verify_o_operator(p.algebra, p.module, t);
      const OOperatorVerdicts v = o_operator_verdicts(p.algebra, p.module, t);
      auto yn = [](bool b) { return std::string(b ? "yes" : "no"); };
      return emit(rep, g,
                  Json{{"graph-subalgebra", yn(v.graph)},
                       {"lift-nijenhuis", yn(v.lift_nijenhuis)},
                       {"maurer-cartan", yn(v.maurer_cartan)}});
    };
  });
  auto* v_den = verify->add_subcommand("dendriform", "Hom-dendriform axioms");
  v_den->add_option("file", file)->required();
  v_den->callback([&] {
    run = [&] { return emit(verify_hom_dendriform(io::load_dendriform(file, g.field_or_q())), g); };
  });
  auto* v_nij = verify->add_subcommand("nijenhuis", "Nijenhuis operator on a Hom-associative algebra");
  v_nij->add_option("-a,--algebra", pair.algebra)->required();
  v_nij->add_option("-n,--operator", t_path)->required();
  v_nij->callback([&] {
    run = [&] {
      const HomAlgebra a = io::load_algebra(pair.algebra, g.field_override());
      return emit(verify_nijenhuis(a, io::load_map(t_path, a.field())), g);
    };
  });

  // bracket
  auto* bracket = app.add_subcommand("bracket", "brackets of cochains");
  bracket->require_subcommand(1);
  auto* b_g = bracket->add_subcommand("gerstenhaber", "[f, g] on cochains A^n -> A twisted by alpha");
  b_g->add_option("-a,--algebra", pair.algebra)->required();
  b_g->add_option("f", file)->required();
  b_g->add_option("g", file2)->required();
  b_g->add_option("-o,--out", out_path);
  b_g->callback([&] {
    run = [&] {
      const HomAlgebra a = io::load_algebra(pair.algebra, g.field_override());
      const Cochain f = io::load_cochain(file, a.field()), h = io::load_cochain(file2, a.field());
      for (const auto* x : {&f, &h})
        if (!x->is_uniform(a.dim()) || x->out_dim() != a.dim()) throw InputError("cochains must be maps A^n -> A");
      const Json out = io::cochain_to_json(gerstenhaber_bracket(f, h, a.alpha), a.dim());
      if (out_path.empty()) std::cout << out.dump(2) << "\n";
      else io::write_json(out_path, out);
      return 0;
    };
  });
  auto* b_d = bracket->add_subcommand("derived", "derived bracket on Hom(M^n, A)");
  add_pair_options(b_d, pair);
  b_d->add_option("p", file)->required();
  b_d->add_option("q", file2)->required();
  b_d->add_option("-o,--out", out_path);
  b_d->callback([&] {
    run = [&] {
      const Pair p = load_pair(pair, g);
      const OContext c{p.algebra, p.module};
      const Cochain x = io::load_cochain(file, c.field()), y = io::load_cochain(file2, c.field());
      const Json out = io::cochain_to_json(derived_bracket(c, x, y), c.m());
      if (out_path.empty()) std::cout << out.dump(2) << "\n";
      else io::write_json(out_path, out);
      return 0;
    };
  });

  // cohomology
  auto* coh = app.add_subcommand("cohomology", "Z^k, B^k, H^k of an O-operator");
  add_pair_options(coh, pair);
  coh->add_option("-t,--operator", t_path)->required();
  coh->add_option("--degree", degree)->required();
  coh->add_option("--differential", which, "T (derived bracket) or H (explicit formula)")
      ->check(CLI::IsMember({"T", "H"}));
  coh->add_flag("--unconstrained", unconstrained, "drop the twist-compatibility constraint on cochains");
  coh->add_option("--out-dir", out_path, "write representative cocycles here");
  coh->callback([&] {
    run = [&] {
      const Pair p = load_pair(pair, g);
      const OContext c{p.algebra, p.module};
      const Matrix t = io::load_map(t_path, c.field());
      if (!g.force)
        if (Report rep = verify_o_operator(p.algebra, p.module, t); !rep.ok())
          throw DomainError("not an O-operator:\n" + rep.to_string());
      const ComplexOptions opt{which == "T" ? Differential::T : Differential::H, unconstrained};
      const CohomologyDims d = cohomology_dims(c, t, degree, opt);
      if (!out_path.empty()) {
        fs::create_directories(out_path);
        for (std::size_t i = 0; i < d.representatives.size(); ++i)
          io::write_json(fs::path(out_path) / ("H" + std::to_string(degree) + "_" + std::to_string(i) + ".json"),
                         io::cochain_to_json(d.representatives[i], c.m()));
      }
      if (g.json)
        std::cout << Json{{"degree", degree}, {"Z", d.z}, {"B", d.b}, {"H", d.h}}.dump() << "\n";
      else
        std::cout << "Z^" << degree << "=" << d.z << " B^" << degree << "=" << d.b << " H^" << degree << "=" << d.h
                  << "\n";
      return 0;
    };
  });

  // deform
  auto* deform = app.add_subcommand("deform", "deformations T + t T_1 + t^2 T_2 + ...");
  deform->require_subcommand(1);
  auto* d_ver = deform->add_subcommand("verify", "check a deformation of order n (or an infinitesimal generator)");
  add_pair_options(d_ver, pair);
  d_ver->add_option("-t,--operator", t_path)->required();
  d_ver->add_option("--terms", terms);
  d_ver->add_option("--generator", file, "cochain file of an infinitesimal generator");
  d_ver->callback([&] {
    run = [&] {
      const Pair p = load_pair(pair, g);
      const OContext c{p.algebra, p.module};
      if (!file.empty()) return emit(verify_infinitesimal(c, io::load_map(t_path, c.field()), io::load_cochain(file, c.field())), g);
      return emit(verify_order_n(c, load_series(p, t_path, terms)), g);
    };
  });
  auto obstruction_cmd = [&](bool must_extend) {
    return [&, must_extend] {
      run = [&, must_extend] {
        const Pair p = load_pair(pair, g);
        const OContext c{p.algebra, p.module};
        const Extension e = extend(c, load_series(p, t_path, terms));
        fs::create_directories(out_dir);
        io::write_json(fs::path(out_dir) / "theta.json", io::cochain_to_json(e.theta));
        if (e.next) io::write_json(fs::path(out_dir) / "Tnext.json", io::map_to_json(*e.next));
        if (g.json)
          std::cout << Json{{"extensible", e.next.has_value()}, {"theta_zero", e.theta.is_zero()}}.dump() << "\n";
        else
          std::cout << "extensible: " << (e.next ? "yes" : "no") << "\n";
        return (!must_extend || e.next) ? 0 : 1;
      };
    };
  };
  auto* d_obs = deform->add_subcommand("obstruction", "write theta.json and decide extensibility");
  add_pair_options(d_obs, pair);
  d_obs->add_option("-t,--operator", t_path)->required();
  d_obs->add_option("--terms", terms)->required();
  d_obs->add_option("--out-dir", out_dir);
  d_obs->callback(obstruction_cmd(false));
  auto* d_ext = deform->add_subcommand("extend", "write the next term Tnext.json; fails when obstructed");
  add_pair_options(d_ext, pair);
  d_ext->add_option("-t,--operator", t_path)->required();
  d_ext->add_option("--terms", terms)->required();
  d_ext->add_option("--out-dir", out_dir);
  d_ext->callback(obstruction_cmd(true));
  auto* d_eq = deform->add_subcommand("equivalence", "equivalence of two infinitesimal deformations");
  add_pair_options(d_eq, pair);
  d_eq->add_option("-t,--operator", t_path)->required();
  d_eq->add_option("--gen1", gen1)->required();
  d_eq->add_option("--gen2", gen2)->required();
  d_eq->add_option("-x", x_text, "comma-separated witness; searched for when omitted");
  d_eq->callback([&] {
    run = [&] {
      const Pair p = load_pair(pair, g);
      const OContext c{p.algebra, p.module};
      const Matrix t = io::load_map(t_path, c.field());
      const Cochain c1 = io::load_cochain(gen1, c.field()), c2 = io::load_cochain(gen2, c.field());
      if (!x_text.empty()) return emit(verify_equivalence_infinitesimal(c, t, c1, c2, parse_vector(x_text, c.field(), c.a())), g);
      const auto x = find_equivalence_witness(c, t, c1, c2);
      Report rep;
      if (!x) rep.add("no-witness-found");
      return emit(rep, g, x ? Json{{"x", io::vector_to_json(*x)}} : Json::object());
    };
  });

  // nijenhuis element
  auto* nij = app.add_subcommand("nijenhuis", "Nijenhuis elements of an O-operator");
  nij->require_subcommand(1);
  auto* n_el = nij->add_subcommand("element", "check x and emit the trivial deformation it generates");
  add_pair_options(n_el, pair);
  n_el->add_option("-t,--operator", t_path)->required();
  n_el->add_option("-x", x_text)->required();
  n_el->add_option("-o,--out", out_path, "write the generator of the trivial deformation here");
  n_el->callback([&] {
    run = [&] {
      const Pair p = load_pair(pair, g);
      const OContext c{p.algebra, p.module};
      const Matrix t = io::load_map(t_path, c.field());
      const Vec x = parse_vector(x_text, c.field(), c.a());
      const Report rep = verify_nijenhuis_element(c, t, x);
      if (rep.ok() && !out_path.empty()) io::write_json(out_path, io::cochain_to_json(trivial_deformation_from(c, t, x)));
      return emit(rep, g);
    };
  });

  // example
  auto* example = app.add_subcommand("example", "write fixture files");
  example->require_subcommand(1);
  std::string pa = "1", pb = "2", r1 = "1", r2 = "0";
  auto* ex25 = example->add_subcommand("example25", "the three-dimensional family with parameters a, b");
  ex25->add_option("--a", pa);
  ex25->add_option("--b", pb);
  ex25->add_option("--rho1", r1);
  ex25->add_option("--rho2", r2);
  ex25->add_option("--out-dir", out_dir);
  ex25->callback([&] {
    run = [&] {
      const Field f = g.field_or_q();
      const HomAlgebra a = example25(f, f.parse_scalar(pa), f.parse_scalar(pb));
      const HomAlgebra plain(a.mu, Matrix::identity(f, 3));
      const std::string stem = "example25_a" + pa + "_b" + pb;
      fs::create_directories(out_dir);
      const fs::path dir(out_dir);
      io::write_json(dir / (stem + ".json"), io::algebra_to_json(a));
      io::write_json(dir / (stem + "_alpha_id.json"), io::algebra_to_json(plain));
      io::write_json(dir / (stem + "_adjoint.json"), io::bimodule_to_json(adjoint_bimodule(a), stem + ".json"));
      io::write_json(dir / (stem + "_R.json"),
                     io::map_to_json(example25_operator(f, f.parse_scalar(r1), f.parse_scalar(r2))));
      std::cout << "wrote " << stem << "{,_alpha_id,_adjoint,_R}.json to " << dir.string() << "\n";
      return 0;
    };
  });

  // search
  auto* search = app.add_subcommand("search", "every O-operator over F_p (p <= 7, dims <= 2), one JSON map per line");
  search->add_option("-a,--algebra", pair.algebra);
  search->add_option("-m,--module", pair.module);
  search->add_option("--instance", instance, "a built-in (A, M) pair instead of files");
  search->add_flag("--list", strict, "list built-in instance names");
  search->callback([&] {
    run = [&] {
      const Field f = g.field_or_q();
      if (strict) {
        for (const auto& i : small_instances(f)) std::cout << i.name << "\n";
        return 0;
      }
      std::optional<Pair> p;
      if (!instance.empty()) {
        for (auto& i : small_instances(f))
          if (i.name == instance) p = Pair{i.algebra, i.module};
        if (!p) throw InputError("unknown instance " + instance);
      } else {
        p = load_pair(pair, g);
      }
      for (const auto& t : search_o_operators(p->algebra, p->module)) std::cout << io::map_to_json(t).dump() << "\n";
      return 0;
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }
  try {
    return run ? run() : 2;
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const fs::filesystem_error& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  }
}
