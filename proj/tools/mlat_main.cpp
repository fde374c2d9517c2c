#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "mlat/errors.hpp"
#include "mlat/report.hpp"

int main(int argc, char** argv) {
  CLI::App app{"mlat: finite multiplicative-lattice toolkit"};
  app.footer(
      "Commands:\n"
      "  validate      check the document's own axioms\n"
      "  lattice       emit the derived multiplicative lattice as a document\n"
      "  spec          prime spectrum, closed sets, sobriety\n"
      "  classify      per-element flags (with --element: one element + series)\n"
      "  series        lower central / derived traces of an element\n"
      "  hyperabelian  the six no-prime conditions (m-distributive input)\n"
      "  brace-ybe     set-theoretic Yang-Baxter solution of a brace\n"
      "  report        everything above in one document\n"
      "  dot           Hasse diagram (with --spec: spectrum order)");

  std::string command, file;
  mlat::CommandOptions opt;
  app.add_option("command", command,
                 "validate | lattice | spec | classify | series | hyperabelian | "
                 "brace-ybe | report | dot")
      ->required();
  app.add_option("file", file, "structure document (json)")->required();
  app.add_option("--mult", opt.mult,
                 "lattice multiplication: commutator|intersection|zero (group), "
                 "product|intersection|zero|ring-commutator (rng)");
  app.add_option("--element", opt.element, "lattice element label");
  app.add_option("--out", opt.out, "output format: json|text|dot");
  app.add_option("--bound", opt.bound, "enumeration cap for derived lattices");
  app.add_flag("--spec", opt.spec_order, "dot: draw the spectrum's specialization order");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    const mlat::StructureDoc doc = mlat::load_structure_file(file);
    const mlat::CommandResult res = mlat::run_command(doc, command, opt);
    std::cout << res.output;
    return res.exit_code;
  } catch (const mlat::falsification_error& e) {
    std::cerr << "falsification: " << e.what() << "\n";
    return 2;
  } catch (const mlat::mlat_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
