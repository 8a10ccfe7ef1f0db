// Copyright 2026 The bhscarpis Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// bhtool: generate, analyze, construct and verify Butson matrices.
//
// Exit codes: 0 success, 1 verification failure, 2 plan error,
// 3 I/O, parse or usage error. Indices on the command line are 1-based.

#include <CLI11.hpp>

#include <algorithm>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "bh/butson.hpp"
#include "bh/error.hpp"
#include "bh/galois.hpp"
#include "bh/io.hpp"
#include "bh/latin.hpp"
#include "bh/scarpis.hpp"

namespace {

constexpr int kExitVerify = 1;
constexpr int kExitPlan = 2;
constexpr int kExitIo = 3;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Writes to `path`, or stdout when the path is empty.
void emit(const std::string& path, const std::string& content) {
  if (path.empty()) {
    std::cout << content;
  } else {
    bh::write_file(path, content);
  }
}

bh::MatrixFormat output_format(const std::string& path, const std::string& flag) {
  if (flag == "json") return bh::MatrixFormat::kJson;
  if (flag == "text") return bh::MatrixFormat::kText;
  return path.empty() ? bh::MatrixFormat::kText : bh::format_for_path(path);
}

void add_output_options(CLI::App* cmd, std::string& out, std::string& format) {
  cmd->add_option("-o,--output", out, "Output path (stdout when omitted)");
  cmd->add_option("--format", format, "json or text (default: from extension)")
      ->check(CLI::IsMember({"json", "text"}));
}

bh::MatrixDocument load_matrix(const std::string& path) { return bh::parse_matrix(bh::read_file(path)); }

std::size_t to_index(std::size_t one_based, std::size_t n, const char* what) {
  if (one_based < 1 || one_based > n) {
    throw UsageError(std::string(what) + " must be in 1.." + std::to_string(n));
  }
  return one_based - 1;
}

std::string pair_string(std::size_t a, std::size_t b) {
  return "(" + std::to_string(a + 1) + "," + std::to_string(b + 1) + ")";
}

// ---- fourier ----------------------------------------------------------------

struct FourierArgs {
  std::size_t n = 0;
  std::string out, format;
};

int run_fourier(const FourierArgs& a) {
  if (a.n < 1) throw UsageError("n must be at least 1");
  const bh::MatrixDocument doc{bh::fourier(a.n), bh::Provenance{{"construction", "fourier"}, {"n", a.n}}};
  emit(a.out, bh::format_matrix(doc, output_format(a.out, a.format)));
  return 0;
}

// ---- verify -----------------------------------------------------------------

struct VerifyArgs {
  std::string path;
  bool analyze = false;
};

int run_verify(const VerifyArgs& a) {
  const bh::ButsonMatrix b = load_matrix(a.path).matrix;
  const bh::VerifyReport report = bh::verify(b);
  const std::string shape = "BH(" + std::to_string(b.root_order()) + "," + std::to_string(b.order()) + ")";
  if (report.ok) {
    std::cout << "verified: " << shape << "\n";
  } else {
    std::cout << "not verified: " << shape << "\n";
    if (report.failing_rows) {
      std::cout << "first failing row pair: " << pair_string(report.failing_rows->first, report.failing_rows->second)
                << "\n";
    }
    if (report.failing_cols) {
      std::cout << "first failing column pair: "
                << pair_string(report.failing_cols->first, report.failing_cols->second) << "\n";
    }
  }
  if (a.analyze) {
    std::cout << "dephased: " << (bh::is_dephased(b) ? "yes" : "no") << "\n";
    if (b.root_order() % 2 == 0 && b.order() % 2 == 0) {
      const auto pairs = bh::find_c1_pairs(b);
      std::cout << "C1 pairs:";
      for (const auto& p : pairs) std::cout << " " << pair_string(p.first, p.second);
      std::cout << (pairs.empty() ? " none" : "") << "\n";
      std::cout << "d_H: " << pairs.size() << "\n";
    } else {
      std::cout << "C1 pairs: not applicable (odd m or n)\n";
    }
    if (b.root_order() % 2 == 0) {
      const auto cells = bh::find_c2_cells(b);
      std::cout << "C2 cells:";
      for (const auto& c : cells) std::cout << " " << pair_string(c.row, c.col);
      std::cout << (cells.empty() ? " none" : "") << "\n";
    } else {
      std::cout << "C2 cells: not applicable (odd m)\n";
    }
  }
  return report.ok ? 0 : kExitVerify;
}

// ---- construct --------------------------------------------------------------

struct ConstructArgs {
  std::string kind, h_path, g_path, lsesc = "classical", out, format;
  std::size_t delete_row = 1;
  std::vector<std::size_t> c1_pair, c2_cell, pre_permute;
  bool dephase_output = false, dephase_inputs = false;
};

std::vector<std::size_t> parse_permutation(const std::vector<std::size_t>& one_based, std::size_t n) {
  if (one_based.size() != n) throw UsageError("--pre-permute-cols needs " + std::to_string(n) + " entries");
  std::vector<std::size_t> perm;
  std::vector<bool> seen(n, false);
  for (std::size_t v : one_based) {
    const std::size_t i = to_index(v, n, "--pre-permute-cols entry");
    if (seen[i]) throw UsageError("--pre-permute-cols is not a permutation");
    seen[i] = true;
    perm.push_back(i);
  }
  return perm;
}

int run_construct(const ConstructArgs& a) {
  bh::ButsonMatrix h = load_matrix(a.h_path).matrix;
  std::optional<bh::ButsonMatrix> g;
  bh::Provenance inputs{{"h", bh::matrix_digest(h)}};
  if (!a.g_path.empty()) {
    g = load_matrix(a.g_path).matrix;
    inputs["g"] = bh::matrix_digest(*g);
  }
  if (a.dephase_inputs) {
    h = bh::dephase(h);
    if (g) g = bh::dephase(*g);
  }
  const std::size_t n = h.order();
  bh::Provenance plan_json;
  std::vector<std::size_t> pre_perm;
  if (!a.pre_permute.empty()) {
    pre_perm = parse_permutation(a.pre_permute, n);
    const bh::ButsonMatrix& src = g ? *g : h;
    g = bh::ButsonMatrix(src.exponents().permute_cols(pre_perm));
  }

  std::optional<std::vector<bh::LatinTensor>> imported;
  std::string lsesc_label = "classical";
  if (a.lsesc != "classical") {
    const std::string text = bh::read_file(a.lsesc);
    imported = bh::encode_all(bh::parse_latin_set(text));
    lsesc_label = "file:" + bh::sha256_hex(text);
  }

  bh::ButsonMatrix result = h;
  std::ostringstream summary;
  if (a.kind == "phi") {
    const std::size_t t = to_index(a.delete_row, n, "--delete-row");
    const bh::PhiPlan plan = bh::make_phi_plan(h, g, t, imported);
    result = bh::phi(plan);
    plan_json["deleted_row"] = t + 1;
    summary << "plan: phi, deleted row " << t + 1 << ", " << plan.lsesc.size() << " LSESC tensors of order "
            << n - 1 << " (" << lsesc_label << ")\n";
  } else {
    std::optional<bh::IndexPair> c1;
    std::optional<bh::Cell> c2;
    if (!a.c1_pair.empty()) {
      if (a.c1_pair.size() != 2) throw UsageError("--c1-pair expects t,s");
      c1 = bh::IndexPair{to_index(a.c1_pair[0], n, "--c1-pair"), to_index(a.c1_pair[1], n, "--c1-pair")};
    }
    if (!a.c2_cell.empty()) {
      if (a.c2_cell.size() != 2) throw UsageError("--c2-cell expects r,c");
      c2 = bh::Cell{to_index(a.c2_cell[0], n, "--c2-cell"), to_index(a.c2_cell[1], n, "--c2-cell")};
    }
    const bh::PsiPlan plan = bh::make_psi_plan(h, g, c1, c2, imported);
    result = bh::psi(plan);
    plan_json["c1_pair"] = {plan.c1.first + 1, plan.c1.second + 1};
    plan_json["c2_cell"] = {plan.c2.row + 1, plan.c2.col + 1};
    summary << "plan: psi, C1 pair " << pair_string(plan.c1.first, plan.c1.second) << ", C2 cell "
            << pair_string(plan.c2.row, plan.c2.col) << ", " << plan.lsesc.size()
            << " LSESC tensors of order " << n / 2 - 1 << " (" << lsesc_label << ")\n";
  }
  plan_json["lsesc"] = lsesc_label;
  if (!pre_perm.empty()) {
    bh::Provenance p = bh::Provenance::array();
    for (std::size_t v : pre_perm) p.push_back(v + 1);
    plan_json["pre_permute_cols"] = p;
  }
  plan_json["dephase_inputs"] = a.dephase_inputs;
  plan_json["dephase"] = a.dephase_output;
  if (a.dephase_output) result = bh::dephase(result);

  const bh::MatrixDocument doc{
      result, bh::Provenance{{"construction", a.kind}, {"inputs", inputs}, {"plan", plan_json}}};
  emit(a.out, bh::format_matrix(doc, output_format(a.out, a.format)));
  std::cerr << "output: BH(" << result.root_order() << "," << result.order() << ")\n" << summary.str();
  return 0;
}

// ---- count ------------------------------------------------------------------

struct CountArgs {
  std::string kind, mols, card, n, card2;
  std::vector<std::string> dh;
};

bh::BigInt parse_big(const std::string& s, const char* what) {
  if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos) {
    throw UsageError(std::string(what) + " must be a non-negative integer");
  }
  return bh::BigInt(s);
}

int run_count(const CountArgs& a) {
  const bh::BigInt mols = parse_big(a.mols, "--mols");
  if (a.kind == "phi") {
    if (a.card.empty() || a.n.empty()) throw UsageError("phi count needs --card and --n");
    std::cout << bh::count_phi_outputs(mols, parse_big(a.card, "--card"), parse_big(a.n, "--n")) << "\n";
  } else {
    if (a.card2.empty()) throw UsageError("psi count needs --card2");
    std::vector<bh::BigInt> dh;
    for (const auto& s : a.dh) dh.push_back(parse_big(s, "--dh"));
    std::cout << bh::count_psi_outputs(mols, parse_big(a.card2, "--card2"), dh) << "\n";
  }
  return 0;
}

// ---- lsesc ------------------------------------------------------------------

struct LsescArgs {
  std::uint64_t q = 0;
  std::string path, out;
};

int run_lsesc_classical(const LsescArgs& a) {
  if (a.q < 2 || !bh::as_prime_power(a.q)) throw bh::PlanError(std::to_string(a.q) + " is not a prime power");
  emit(a.out, bh::format_latin_set(bh::classical_lsesc_set(a.q)));
  return 0;
}

int run_lsesc_check(const LsescArgs& a) {
  const auto set = bh::parse_latin_set(bh::read_file(a.path));
  std::vector<bh::LatinSquare> conj;
  for (const auto& l : set) conj.push_back(bh::conjugate_lsesc_mols(l));
  const bool same_order =
      std::all_of(set.begin(), set.end(), [&](const auto& l) { return l.order() == set.front().order(); });
  if (!same_order) throw bh::ParseError("all squares must have the same order");
  const bool lsesc = bh::pairwise_lsesc(set);
  const bool mols = bh::pairwise_mols(set);
  const std::size_t order = set.empty() ? 0 : set.front().order();
  std::cout << "squares: " << set.size() << " of order " << order << "\n";
  std::cout << "pairwise LSESC: " << (lsesc ? "yes" : "no") << "\n";
  std::cout << "pairwise MOLS: " << (mols ? "yes" : "no") << "\n";
  std::cout << "conjugates pairwise MOLS: " << (bh::pairwise_mols(conj) ? "yes" : "no") << "\n";
  std::cout << "complete: " << (order > 0 && set.size() + 1 == order ? "yes" : "no") << "\n";
  return 0;
}

int run_lsesc_conjugate(const LsescArgs& a) {
  std::vector<bh::LatinSquare> conj;
  for (const auto& l : bh::parse_latin_set(bh::read_file(a.path))) conj.push_back(bh::conjugate_lsesc_mols(l));
  emit(a.out, bh::format_latin_set(conj));
  return 0;
}

// ---- convert / dephase ------------------------------------------------------

struct ConvertArgs {
  std::string in, out, format;
  bool dephase = false;
};

int run_convert(const ConvertArgs& a) {
  bh::MatrixDocument doc = load_matrix(a.in);
  if (a.dephase) doc.matrix = bh::dephase(doc.matrix);
  emit(a.out, bh::format_matrix(doc, output_format(a.out, a.format)));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Butson matrix toolkit: Scarpis-type constructions and exact verification"};
  app.require_subcommand(1);
  std::function<int()> action;

  FourierArgs fa;
  auto* fourier = app.add_subcommand("fourier", "Write the Fourier matrix F_n");
  fourier->add_option("n", fa.n, "Order")->required();
  add_output_options(fourier, fa.out, fa.format);
  fourier->callback([&] { action = [&] { return run_fourier(fa); }; });

  VerifyArgs va;
  auto* verify = app.add_subcommand("verify", "Exactly verify a matrix file");
  verify->add_option("path", va.path, "Matrix file")->required();
  verify->add_flag("--analyze", va.analyze, "Also report C1 pairs, C2 cells and d_H");
  verify->callback([&] { action = [&] { return run_verify(va); }; });

  ConstructArgs ca;
  auto* construct = app.add_subcommand("construct", "Build a matrix with phi or psi");
  construct->add_option("kind", ca.kind, "phi or psi")->required()->check(CLI::IsMember({"phi", "psi"}));
  construct->add_option("H", ca.h_path, "Core / T source matrix file")->required();
  construct->add_option("-g,--top", ca.g_path, "Optional second matrix for the top block and scaling row");
  construct->add_option("--delete-row", ca.delete_row, "phi: row of the top source to delete (1-based)");
  construct->add_option("--c1-pair", ca.c1_pair, "psi: C1 row pair t,s (1-based)")->delimiter(',');
  construct->add_option("--c2-cell", ca.c2_cell, "psi: C2 cell r,c (1-based)")->delimiter(',');
  construct->add_option("--lsesc", ca.lsesc, "classical, or a Latin square set file");
  construct->add_option("--pre-permute-cols", ca.pre_permute,
                        "Column permutation (1-based, comma separated) applied to the top source")
      ->delimiter(',');
  construct->add_flag("--dephase", ca.dephase_output, "Dephase the output");
  construct->add_flag("--dephase-inputs", ca.dephase_inputs, "Dephase the inputs before constructing");
  add_output_options(construct, ca.out, ca.format);
  construct->callback([&] { action = [&] { return run_construct(ca); }; });

  CountArgs cna;
  auto* count = app.add_subcommand("count", "Evaluate the output-count formulas");
  count->add_option("kind", cna.kind, "phi or psi")->required()->check(CLI::IsMember({"phi", "psi"}));
  count->add_option("--mols", cna.mols, "Number of complete MOLS sets")->required();
  count->add_option("--card", cna.card, "phi: number of BH(m,n)");
  count->add_option("--n", cna.n, "phi: matrix order");
  count->add_option("--card2", cna.card2, "psi: number of C2 matrices");
  count->add_option("--dh", cna.dh, "psi: d_H values, one per C1 matrix");
  count->callback([&] { action = [&] { return run_count(cna); }; });

  LsescArgs la;
  auto* lsesc = app.add_subcommand("lsesc", "Latin square sets");
  lsesc->require_subcommand(1);
  auto* classical = lsesc->add_subcommand("classical", "Classical complete set over GF(q)");
  classical->add_option("q", la.q, "Prime power")->required();
  classical->add_option("-o,--output", la.out, "Output path (stdout when omitted)");
  classical->callback([&] { action = [&] { return run_lsesc_classical(la); }; });
  auto* check = lsesc->add_subcommand("check", "Report pairwise LSESC / MOLS");
  check->add_option("path", la.path, "Latin square set file")->required();
  check->callback([&] { action = [&] { return run_lsesc_check(la); }; });
  auto* conjugate = lsesc->add_subcommand("conjugate", "Conjugate every square (LSESC <-> MOLS)");
  conjugate->add_option("path", la.path, "Latin square set file")->required();
  conjugate->add_option("-o,--output", la.out, "Output path (stdout when omitted)");
  conjugate->callback([&] { action = [&] { return run_lsesc_conjugate(la); }; });

  ConvertArgs cva;
  auto* convert = app.add_subcommand("convert", "Rewrite a matrix file in another format");
  convert->add_option("input", cva.in, "Matrix file")->required();
  convert->add_flag("--dephase", cva.dephase, "Dephase the matrix");
  add_output_options(convert, cva.out, cva.format);
  convert->callback([&] { action = [&] { return run_convert(cva); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitIo;
  }

  try {
    return action();
  } catch (const bh::VerificationError& e) {
    std::cerr << "verification failure: " << e.what() << "\n";
    return kExitVerify;
  } catch (const bh::PlanError& e) {
    std::cerr << "plan error: " << e.what() << "\n";
    return kExitPlan;
  } catch (const bh::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitIo;
  } catch (const bh::IoError& e) {
    std::cerr << "I/O error: " << e.what() << "\n";
    return kExitIo;
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitIo;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIo;
  }
}
