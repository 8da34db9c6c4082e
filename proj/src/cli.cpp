// Copyright 2026 The antilat Authors
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

#include "cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <cstdlib>
#include <json.hpp>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "antilat/antilat.hpp"

namespace antilat::cli {

  namespace {

    using nlohmann::ordered_json;

    ordered_json report_object(ClassificationReport const& r, ClassifyOptions const& opt) {
      auto guarded = [](auto const& v) -> ordered_json {
        if (!v) {
          return "skipped";
        }
        return *v;
      };
      ordered_json j;
      j["order"]                  = r.order;
      j["p"]                      = r.type.p;
      j["q"]                      = r.type.q;
      j["r"]                      = r.type.r;
      j["s"]                      = r.type.s;
      j["square"]                 = r.type.square;
      j["semisquare"]             = r.type.semisquare;
      j["meet_square"]            = r.type.meet_square;
      j["join_square"]            = r.type.join_square;
      j["flat"]                   = r.type.flat;
      j["semiflat"]               = r.type.semiflat;
      j["meet_flat"]              = r.type.meet_flat;
      j["join_flat"]              = r.type.join_flat;
      j["quasilattice"]           = r.quasilattice;
      j["odd"]                    = r.odd;
      j["latin"]                  = r.latin;
      j["semimagic_presentation"] = r.semimagic_presentation;
      if (opt.exhaustive_semimagic) {
        j["semimagic"] = guarded(r.semimagic_exhaustive);
      }
      j["magic_presentation"] = r.magic_presentation;
      j["regular"]            = r.regularity.regular;
      j["meet_l_congruence"]  = r.regularity.meet_l;
      j["meet_r_congruence"]  = r.regularity.meet_r;
      j["join_l_congruence"]  = r.regularity.join_l;
      j["join_r_congruence"]  = r.regularity.join_r;
      j["simple"]             = guarded(r.simple);
      j["irreducible"]        = guarded(r.irreducible);
      j["elementary"]         = r.elementary;
      j["congruence_count"]   = guarded(r.congruence_count);
      j["even_edge_count"]    = r.even_edge_count;
      return j;
    }

    std::size_t env_max_order() {
      if (char const* v = std::getenv("ANTILAT_MAX_ORDER")) {
        try {
          std::size_t pos = 0;
          auto const  n   = std::stoull(v, &pos);
          if (pos == std::string(v).size()) {
            return n;
          }
        } catch (std::exception const&) {
        }
        throw InvalidArgument(std::string("ANTILAT_MAX_ORDER is not a number: '") + v + "'");
      }
      return default_max_order;
    }

    void emit(std::string const& text, std::string const& path, std::ostream& out) {
      if (path.empty() || path == "-") {
        out << text;
      } else {
        write_text_file(path, text);
      }
    }

    std::string bracketed(Partition const& p, std::size_t base) {
      return "[" + p.to_string(base) + "]";
    }

    std::string matrix_literal(GeneratingMatrix const& g, std::size_t base) {
      std::string s = "[";
      for (std::size_t i = 0; i < g.rows(); ++i) {
        s += i ? ",[" : "[";
        for (std::size_t j = 0; j < g.cols(); ++j) {
          s += (j ? "," : "") + std::to_string(g.at(i, j) + base);
        }
        s += "]";
      }
      return s + "]";
    }

    struct Options {
      std::string path;
      std::string path2;
      std::string output;
      std::string dot;
      std::string partition;
      std::size_t side        = 0;
      std::size_t max_order   = 0;
      unsigned    parallel    = 1;
      bool        json        = false;
      bool        strict      = false;
      bool        list        = false;
      bool        exhaustive  = false;
    };

    int cmd_check(Options const& o, std::ostream& out, std::ostream& err) {
      auto const      file = load_antilattice(o.path);
      ClassifyOptions opt;
      opt.max_order            = o.max_order;
      opt.exhaustive_semimagic = o.exhaustive;
      opt.threads              = file.antilattice.size() > 100 ? o.parallel : 1;
      auto const report        = classify(file.antilattice, opt);
      out << (o.json ? report_json(report, opt) : report_text(report, opt));
      if (report.any_skipped(opt)) {
        err << "note: order " << report.order << " exceeds a guard; some predicates were skipped"
            << " (raise --max-order or ANTILAT_MAX_ORDER)\n";
        if (o.strict) {
          return exit_skipped;
        }
      }
      return exit_ok;
    }

    int cmd_congruences(Options const& o, std::ostream& out, std::ostream&) {
      auto const file = load_antilattice(o.path);
      auto const lat  = all_congruences(file.antilattice, o.max_order);
      out << "congruences: " << lat.size() << '\n'
          << "atoms: " << lat.atoms.size() << '\n'
          << "coatoms: " << lat.coatoms.size() << '\n';
      if (o.list) {
        for (auto const& c : lat.elements) {
          out << bracketed(c.partition, file.base) << '\n';
        }
      }
      if (!o.dot.empty()) {
        emit(lattice_to_dot(lat, file.base), o.dot, out);
      }
      return exit_ok;
    }

    int cmd_even_graph(Options const& o, std::ostream& out, std::ostream&) {
      auto const file = load_antilattice(o.path);
      auto const g    = even_graph(file.antilattice);
      out << "edges: " << g.edges.size() << '\n';
      for (auto const& e : g.edges) {
        out << e.u + file.base << ' ' << e.v + file.base << ' ' << to_string(e.color) << '\n';
      }
      if (!o.dot.empty()) {
        emit(even_graph_to_dot(g, file.base), o.dot, out);
      }
      return exit_ok;
    }

    int cmd_construct_mols(Options const& o, std::ostream& out, std::ostream&) {
      auto const n = latin_antilattice_from_mols(generate_mols(o.side));
      emit(format_alat({1, n}), o.output, out);
      return exit_ok;
    }

    int cmd_construct_product(Options const& o, std::ostream& out, std::ostream&) {
      auto const a = load_antilattice(o.path);
      auto const b = load_antilattice(o.path2);
      emit(format_alat({a.base, product(a.antilattice, b.antilattice)}), o.output, out);
      return exit_ok;
    }

    int cmd_construct_from_join(Options const& o, std::ostream& out, std::ostream&) {
      auto const s = parse_square(read_text_file(o.path));
      if (!is_permutation_of_1_to_n2(s)) {
        throw BadEntries("the join square must hold each of 1, ..., "
                         + std::to_string(s.size() * s.size()) + " once");
      }
      std::vector<Element> cells;
      for (auto v : s.cells()) {
        cells.push_back(static_cast<Element>(v - 1));
      }
      Antilattice n(GeneratingMatrix::normal(s.size(), s.size()),
                    GeneratingMatrix(s.size(), s.size(), std::move(cells)));
      emit(format_alat({1, n}), o.output, out);
      return exit_ok;
    }

    int cmd_rect_test(Options const& o, std::ostream& out, std::ostream&) {
      auto const f = parse_cay(read_text_file(o.path));
      if (f.operations.size() != 1) {
        throw InvalidArgument("rect-test needs a file with exactly one op block");
      }
      auto const& t      = f.operations.front().table;
      auto const  base   = f.base;
      auto        show   = [base](Element x) { return std::to_string(x + base); };
      bool const  idem   = is_idempotent(t);
      auto const  assoc  = associativity_witness(t);
      out << "idempotent: " << (idem ? "yes" : "no") << '\n';
      out << "associative: ";
      if (assoc) {
        out << "no, (xy)z != x(yz) at x,y,z = " << show((*assoc)[0]) << ','
            << show((*assoc)[1]) << ',' << show((*assoc)[2]) << '\n';
      } else {
        out << "yes\n";
      }
      auto const tr = rectangularity_trace(t);
      out << "table lookups: " << tr.lookups << '\n';
      if (!tr.shape_ok) {
        out << "result: NotRectangular (first row and column do not give a p x q layout of "
            << t.size() << " cells)\n";
        return exit_ok;
      }
      if (!tr.filled) {
        out << "result: NotRectangular (the " << tr.p << "x" << tr.q
            << " layout repeats an element)\n";
        return exit_ok;
      }
      GeneratingMatrix const g(tr.p, tr.q, tr.cells);
      if (tr.failed_check) {
        auto const [x, y] = *tr.failed_check;
        out << "check failed: " << show(y) << '*' << show(x) << " = " << show(t(y, x))
            << " != " << show(0) << '\n';
      }
      if (assoc) {
        out << "warning: not associative; matrix filled anyway: " << matrix_literal(g, base)
            << " (result meaningless)\n";
        return exit_ok;
      }
      if (!idem || tr.failed_check) {
        out << "result: NotRectangular (filled " << matrix_literal(g, base) << ")\n";
        return exit_ok;
      }
      out << "result: rectangular " << tr.p << "x" << tr.q << ' ' << matrix_literal(g, base)
          << '\n';
      return exit_ok;
    }

    int cmd_quotient(Options const& o, std::ostream& out, std::ostream& err) {
      auto const file = load_antilattice(o.path);
      auto const part = Partition::parse(o.partition, file.antilattice.size(), file.base);
      auto const c    = require_congruence(file.antilattice, part, file.base);
      auto const q    = quotient(file.antilattice, c);
      emit(format_alat({file.base, q.antilattice}), o.output, out);
      auto const blocks = part.blocks();
      for (std::size_t k = 0; k < q.representative.size(); ++k) {
        err << k + file.base << " = [";
        for (std::size_t t = 0; t < blocks[k].size(); ++t) {
          err << (t ? "," : "") << blocks[k][t] + file.base;
        }
        err << "]\n";
      }
      return exit_ok;
    }

  }  // namespace

  std::string report_json(ClassificationReport const& r, ClassifyOptions const& opt) {
    return report_object(r, opt).dump() + "\n";
  }

  std::string report_text(ClassificationReport const& r, ClassifyOptions const& opt) {
    auto const  obj   = report_object(r, opt);
    std::size_t width = 0;
    for (auto const& [key, _] : obj.items()) {
      width = std::max(width, key.size());
    }
    std::ostringstream out;
    for (auto const& [key, value] : obj.items()) {
      out << key << std::string(width - key.size() + 2, ' ')
          << (value.is_string() ? value.get<std::string>() : value.dump()) << '\n';
    }
    return out.str();
  }

  int run(std::vector<std::string> const& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Antilattice toolkit: classification, congruences, Latin and magic squares",
                 "antilat"};
    app.require_subcommand(1);
    Options o;

    auto* check = app.add_subcommand("check", "Classify an antilattice");
    check->add_option("file", o.path, ".alat or .cay file")->required();
    check->add_flag("--exhaustive-semimagic", o.exhaustive,
                    "Also test semimagic over every normal-form relabelling");
    check->add_option("--max-order", o.max_order, "Order guard for expensive predicates");
    check->add_flag("--json", o.json, "Print a JSON object");
    check->add_flag("--strict", o.strict, "Exit with 1 if a predicate was skipped");
    check->add_option("--parallel", o.parallel, "Threads for the simplicity sweep (order > 100)")
        ->check(CLI::Range(1u, 256u));

    auto* congr = app.add_subcommand("congruences", "Enumerate the congruence lattice");
    congr->add_option("file", o.path)->required();
    congr->add_flag("--list", o.list, "Print every congruence");
    congr->add_option("--dot", o.dot, "Write the Hasse diagram as DOT ('-' for stdout)");
    congr->add_option("--max-order", o.max_order);

    auto* even = app.add_subcommand("even-graph", "List the colored even-graph edges");
    even->add_option("file", o.path)->required();
    even->add_option("--dot", o.dot, "Write the graph as DOT ('-' for stdout)");

    auto* construct = app.add_subcommand("construct", "Build an .alat file");
    construct->require_subcommand(1);
    auto* mols = construct->add_subcommand("mols", "Latin antilattice of order N^2");
    mols->add_option("n", o.side)->required();
    mols->add_option("-o,--output", o.output);
    auto* prod = construct->add_subcommand("product", "Direct product of two antilattices");
    prod->add_option("a", o.path)->required();
    prod->add_option("b", o.path2)->required();
    prod->add_option("-o,--output", o.output);
    auto* from_join = construct->add_subcommand("from-join", "Normal M with the given square as J");
    from_join->add_option("square", o.path)->required();
    from_join->add_option("-o,--output", o.output);

    auto* rect = app.add_subcommand("rect-test", "Run the linear rectangularity test");
    rect->add_option("file", o.path, ".cay file with one op block")->required();

    auto* quot = app.add_subcommand("quotient", "Quotient by a congruence");
    quot->add_option("file", o.path)->required();
    quot->add_option("partition", o.partition, "e.g. 1,4|2,3,5,6")->required();
    quot->add_option("-o,--output", o.output);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
      app.parse(reversed);
    } catch (CLI::ParseError const& e) {
      auto const code = app.exit(e, out, err);
      return code == 0 ? exit_ok : exit_error;
    }

    try {
      if (o.max_order == 0) {
        o.max_order = env_max_order();
      }
      if (check->parsed()) {
        return cmd_check(o, out, err);
      }
      if (congr->parsed()) {
        return cmd_congruences(o, out, err);
      }
      if (even->parsed()) {
        return cmd_even_graph(o, out, err);
      }
      if (mols->parsed()) {
        return cmd_construct_mols(o, out, err);
      }
      if (prod->parsed()) {
        return cmd_construct_product(o, out, err);
      }
      if (from_join->parsed()) {
        return cmd_construct_from_join(o, out, err);
      }
      if (rect->parsed()) {
        return cmd_rect_test(o, out, err);
      }
      if (quot->parsed()) {
        return cmd_quotient(o, out, err);
      }
    } catch (OrderGuardExceeded const& e) {
      err << "error: " << e.what() << '\n';
      return exit_skipped;
    } catch (Error const& e) {
      err << "error: " << e.what() << '\n';
      return exit_error;
    }
    return exit_error;
  }

}  // namespace antilat::cli
