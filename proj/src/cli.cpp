#include "pipn/cli.hpp"

#include <CLI11.hpp>
#include <istream>
#include <ostream>

#include "pipn/canonical.hpp"
#include "pipn/errors.hpp"
#include "pipn/render.hpp"
#include "pipn/rewrite.hpp"
#include "pipn/verify.hpp"
#include "text.hpp"

namespace pipn {

  namespace {

    struct Options {
      int                      n = 0;
      std::vector<std::string> payloads;
      bool                     check = false;
      std::uint64_t            fuel = 0;
      std::string              suite = "all";
      std::string              format = "ascii";
      bool                     count = false;
    };

    CLI::App* command(CLI::App& app, std::string name, std::string help, Options& o) {
      CLI::App* sub = app.add_subcommand(std::move(name), std::move(help));
      sub->add_option("-n", o.n, "rank")->required();
      // Raw extras: CLI11 would split bracketed payloads as lists.
      sub->allow_extras();
      sub->footer("Payloads (diagrams or words) follow the options or come from stdin.");
      return sub;
    }

    std::vector<std::string> payloads(Options const& o, std::istream& in) {
      if (!o.payloads.empty()) {
        return o.payloads;
      }
      std::vector<std::string> out;
      for (std::string line; std::getline(in, line);) {
        out.push_back(line);
      }
      return out;
    }

    Diagram diagram_or_word(std::string_view text, int n) {
      return detail::trim(text).starts_with('[') ? parse_diagram(text, n)
                                                  : eval_word(parse_word(text, n));
    }

    int verify(Options const& o, std::ostream& out, std::ostream& err) {
      std::vector<VerificationReport> reports;
      bool const                      all = o.suite == "all";
      if (all || o.suite == "relations") {
        reports.push_back(check_relations(o.n));
      }
      if (all || o.suite == "derived") {
        reports.push_back(check_derived(o.n));
      }
      if (o.suite == "iso" || (all && o.n <= 4)) {
        reports.push_back(isomorphism_report(o.n));
      } else if (all) {
        err << "iso n=" << o.n << ": skipped, the isomorphism report covers ranks 3 and 4\n";
      }
      bool ok = true;
      for (auto const& r : reports) {
        out << r.tsv() << r.summary() << '\n';
        ok = ok && r.pass();
      }
      return ok ? exit_ok : exit_failed;
    }

    int dispatch(std::string const& name, Options const& o, std::istream& in, std::ostream& out,
                 std::ostream& err) {
      if (name == "verify") {
        return verify(o, out, err);
      }
      if (name == "enumerate") {
        if (o.count) {
          out << count_pip(o.n) << '\n';
        } else {
          for (auto const& d : enumerate_pip(o.n)) {
            out << serialize(d) << '\n';
          }
        }
        return exit_ok;
      }
      auto const items = payloads(o, in);
      if (name == "mul") {
        if (items.empty()) {
          throw InvalidInput("mul needs at least one diagram");
        }
        Diagram prod = Diagram::identity(o.n);
        for (auto const& s : items) {
          prod = prod * parse_diagram(s, o.n);
        }
        out << serialize(prod) << '\n';
        return exit_ok;
      }
      int status = exit_ok;
      for (auto const& s : items) {
        if (name == "eval") {
          out << serialize(eval_word(parse_word(s, o.n))) << '\n';
        } else if (name == "extract") {
          out << to_string(canonical_of_diagram(parse_diagram(s, o.n))) << '\n';
        } else if (name == "render") {
          Diagram const d = diagram_or_word(s, o.n);
          out << (o.format == "svg" ? render_svg(d) : render_ascii(d));
        } else if (name == "normalize") {
          Word const          w = parse_word(s, o.n);
          std::uint64_t const fuel = o.fuel ? o.fuel : default_fuel(w);
          CanonicalWord const cw = normalize(w, fuel);
          out << to_string(cw);
          if (o.check) {
            CanonicalWord const sym = normalize_symbolic(w, fuel);
            bool const ok = eval_canonical(sym) == eval_word(w) && eval_canonical(cw) == eval_word(w);
            out << "\tcheck=" << (ok ? "ok" : "FAILED");
            if (!ok) {
              status = exit_failed;
            }
          }
          out << '\n';
        }
      }
      return status;
    }

  }  // namespace

  int run_cli(std::vector<std::string> const& args, std::istream& in, std::ostream& out,
              std::ostream& err) {
    CLI::App app("Arithmetic, normal forms and verification for PIP_n.", "pip");
    app.require_subcommand(1);
    Options o;
    command(app, "mul", "multiply diagrams left to right", o);
    command(app, "eval", "evaluate words", o);
    CLI::App* norm = command(app, "normalize", "rewrite words to canonical form", o);
    norm->add_flag("--check", o.check, "also compare values");
    norm->add_option("--fuel", o.fuel, "rewrite step budget");
    command(app, "extract", "canonical word of a diagram", o);
    command(app, "verify", "run the audits", o)
        ->add_option("--suite", o.suite, "relations, derived, iso or all")
        ->check(CLI::IsMember({"relations", "derived", "iso", "all"}));
    command(app, "enumerate", "list PIP_n", o)->add_flag("--count", o.count, "print the size only");
    command(app, "render", "draw a diagram or the value of a word", o)
        ->add_option("--format", o.format, "ascii or svg")
        ->check(CLI::IsMember({"ascii", "svg"}));

    try {
      std::vector<std::string> reversed(args.rbegin(), args.rend());
      app.parse(reversed);
    } catch (CLI::ParseError const& e) {
      int const code = app.exit(e, out, err);
      return code == 0 ? exit_ok : exit_invalid;
    }
    CLI::App* sub = app.get_subcommands().front();
    o.payloads = sub->remaining();
    std::string const name = sub->get_name();
    try {
      return dispatch(name, o, in, out, err);
    } catch (FuelExhausted const& e) {
      err << "pip: " << e.what() << '\n';
      return exit_fuel;
    } catch (InvalidInput const& e) {
      err << "pip: " << e.what() << '\n';
      return exit_invalid;
    }
  }

}  // namespace pipn
