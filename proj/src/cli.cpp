#include "arrkit/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <ostream>
#include <sstream>

#include "arrkit/catalog.hpp"
#include "arrkit/report.hpp"

namespace arrkit {

namespace {

Arrangement load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_arrangement(ss.str()).arr;
}

void check_index(const Arrangement& a, int i) {
  if (i < 0 || i >= a.size())
    throw std::runtime_error("index " + std::to_string(i) +
                             " out of range (0.." +
                             std::to_string(a.size() - 1) + ")");
}

void print_chi(const Arrangement& a, bool json, std::ostream& out) {
  UniPoly chi = char_poly(a);
  UniPoly pi = poincare_poly(chi, a.nvars);
  std::vector<long long> bs, b0s;
  for (int i = 0; i <= a.nvars; ++i) bs.push_back(betti(chi, a.nvars, i));
  std::string chi0_str;
  if (a.size() > 0) {
    chi0_str = chi0(chi).str("t");
    for (int i = 0; i < a.nvars; ++i) b0s.push_back(betti0(chi, a.nvars, i));
  }
  if (json) {
    Json j;
    j["vars"] = a.nvars;
    j["size"] = a.size();
    j["chi"] = chi.str("t");
    j["poincare"] = pi.str("t");
    if (!chi0_str.empty()) j["chi0"] = chi0_str;
    j["b"] = bs;
    j["b0"] = b0s;
    out << j.dump(2) << "\n";
    return;
  }
  out << "chi(A;t) = " << chi.str("t") << "\n";
  out << "pi(A;t) = " << pi.str("t") << "\n";
  if (!chi0_str.empty()) out << "chi0(A;t) = " << chi0_str << "\n";
  out << "b =";
  for (long long b : bs) out << " " << b;
  out << "\nb0 =";
  for (long long b : b0s) out << " " << b;
  out << "\n";
}

std::string exps_str(const std::vector<int>& e) {
  std::string s = "(";
  for (size_t i = 0; i < e.size(); ++i)
    s += (i ? "," : "") + std::to_string(e[i]);
  return s + ")";
}

int print_classification(const ClassificationReport& rep, bool json,
                         std::ostream& out) {
  if (json) {
    out << to_json(rep).dump(2) << "\n";
  } else {
    out << verdict_name(rep.verdict);
    if (rep.verdict == Verdict::Free)
      out << " exp " << exps_str(rep.exponents);
    else if (rep.verdict != Verdict::NeitherAtBound)
      out << " poexp " << exps_str(rep.exponents) << " level " << rep.level;
    out << "\n";
    if (!rep.generator_degrees.empty())
      out << "generator degrees " << exps_str(rep.generator_degrees) << "\n";
    if (!rep.syzygy_degrees.empty())
      out << "syzygy degrees " << exps_str(rep.syzygy_degrees) << "\n";
    out << "checked: generators to " << rep.verified_to << ", syzygies to "
        << rep.syzygy_checked_to << ", hilbert to " << rep.hilbert_checked_to
        << "\n";
    if (!rep.obstruction.empty()) out << rep.obstruction << "\n";
  }
  switch (rep.verdict) {
    case Verdict::Free:
      return 0;
    case Verdict::StrictPOG:
    case Verdict::POG:
      return 2;
    default:
      return 3;
  }
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"exact classifier for central hyperplane arrangements"};
  app.require_subcommand(1);
  app.fallthrough();
  bool json = false;
  app.add_flag("--json", json, "emit JSON reports");

  std::string file, pool_file, name;
  int index = -1, bound = -1, hbound = -1, ell = 0;
  bool no_spans = false;

  auto* c_chi = app.add_subcommand("chi", "characteristic polynomial data");
  c_chi->add_option("file", file)->required();

  auto* c_cls = app.add_subcommand("classify", "free / plus-one verdict");
  c_cls->add_option("file", file)->required();
  c_cls->add_option("--bound", bound, "generator search bound");
  c_cls->add_option("--hilbert-bound", hbound, "Hilbert consistency bound");

  auto* c_tri = app.add_subcommand("triple", "addition-deletion triple");
  c_tri->add_option("file", file)->required();
  c_tri->add_option("--index", index)->required();

  auto* c_del = app.add_subcommand("delete", "remove one hyperplane");
  c_del->add_option("file", file)->required();
  c_del->add_option("--index", index)->required();

  auto* c_res = app.add_subcommand("restrict", "restrict to one hyperplane");
  c_res->add_option("file", file)->required();
  c_res->add_option("--index", index)->required();

  auto* c_zie = app.add_subcommand("ziegler", "Ziegler restriction");
  c_zie->add_option("file", file)->required();
  c_zie->add_option("--index", index)->required();

  auto* c_fil = app.add_subcommand("filtration", "free filtration search");
  c_fil->add_option("file", file)->required();

  auto* c_fad = app.add_subcommand("free-additions",
                                   "hyperplanes whose addition stays free");
  c_fad->add_option("file", file)->required();
  c_fad->add_option("--pool", pool_file, "extra candidate forms");
  c_fad->add_flag("--no-spans", no_spans,
                  "skip the default rank-2 span candidates");

  auto* c_scn = app.add_subcommand("scan", "deletion conjecture scan");
  c_scn->add_option("file", file)->required();

  auto* c_cat = app.add_subcommand("catalog", "built-in arrangements");
  c_cat->add_option("name", name)->required();
  c_cat->add_option("--ell", ell, "rank parameter where applicable");

  std::vector<std::string> argv_s = args;
  std::vector<char*> argv;
  static char prog[] = "arrkit";
  argv.push_back(prog);
  for (auto& s : argv_s) argv.push_back(s.data());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return 64;
  }

  try {
    if (*c_chi) {
      print_chi(load(file), json, out);
      return 0;
    }
    if (*c_cls) {
      try {
        return print_classification(classify(load(file), bound, hbound), json,
                                    out);
      } catch (const NonEssentialError& e) {
        err << e.what() << "\n";
        return 4;
      }
    }
    if (*c_tri) {
      Arrangement a = load(file);
      check_index(a, index);
      out << to_json(addition_deletion_check(a, index)).dump(2) << "\n";
      return 0;
    }
    if (*c_del) {
      Arrangement a = load(file);
      check_index(a, index);
      out << write_arrangement(delete_hyperplane(a, index));
      return 0;
    }
    if (*c_res) {
      Arrangement a = load(file);
      check_index(a, index);
      out << write_arrangement(restrict_arrangement(a, index).arr);
      return 0;
    }
    if (*c_zie) {
      Arrangement a = load(file);
      check_index(a, index);
      ZieglerRestriction z = ziegler_restrict(a, index);
      out << write_arrangement(z.restricted, &z.mult);
      return 0;
    }
    if (*c_fil) {
      FiltrationResult r = free_filtration(load(file));
      if (json)
        out << to_json(r).dump(2) << "\n";
      else if (!r.exists)
        out << "no free filtration\n";
      else {
        out << "order:";
        for (int h : r.order) out << " " << h;
        out << "\n";
        for (size_t t = 0; t < r.exponents.size(); ++t)
          out << "step " << t + 1 << " exp " << exps_str(r.exponents[t])
              << "\n";
      }
      return 0;
    }
    if (*c_fad) {
      Arrangement a = load(file);
      std::vector<Hyperplane> extra;
      if (!pool_file.empty()) {
        Arrangement p = load(pool_file);
        extra = p.hyperplanes;
      }
      FreeAdditionsReport r = free_additions(a, extra, !no_spans);
      if (json) {
        out << to_json(r).dump(2) << "\n";
      } else {
        out << r.pool.size() << " candidates, " << r.hit_indices.size()
            << " free additions\n";
        for (size_t t = 0; t < r.hit_indices.size(); ++t)
          out << r.pool[r.hit_indices[t]].str() << "  exp "
              << exps_str(r.hit_exponents[t]) << "\n";
      }
      return 0;
    }
    if (*c_scn) {
      ConjectureScan r = conjecture_scan(load(file));
      if (json) {
        out << to_json(r).dump(2) << "\n";
      } else {
        for (const auto& row : r.rows)
          out << "H" << row.index << " d=" << row.d
              << (row.holds ? " ok" : " VIOLATION") << "\n";
        out << (r.conjecture_holds ? "conjecture holds\n"
                                   : "conjecture violated\n");
      }
      return 0;
    }
    if (*c_cat) {
      out << write_arrangement(catalog(name, ell));
      return 0;
    }
  } catch (const std::exception& e) {
    err << e.what() << "\n";
    return 1;
  }
  return 0;
}

}  // namespace arrkit
