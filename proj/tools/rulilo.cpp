#include <cstdint>
#include <fstream>
#include <iostream>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

#include "pl0plus/diagnostics.hpp"
#include "pl0plus/isa.hpp"
#include "pl0plus/vm.hpp"

namespace {

const char* kHelp =
    "uso: rulilo [-a] [-d] programa-objeto.p+\n"
    "\n"
    "Máquina virtual de p+. Carga el archivo objeto indicado y lo ejecuta;\n"
    "los valores escritos salen por la salida estándar, uno por línea, y los\n"
    "leídos se toman de la entrada estándar.\n"
    "\n"
    "opciones:\n"
    "  -a, --ayuda    muestra esta ayuda y termina\n"
    "  -d, --depurar  ejecuta paso a paso mostrando los registros; avanza\n"
    "                 con Enter\n";

std::string describe(const pl0plus::Instruction& instr) {
  std::string text{pl0plus::mnemonic(instr.op)};
  if (pl0plus::operand_count(instr.op) >= 1) text += " " + std::to_string(instr.a);
  if (pl0plus::operand_count(instr.op) == 2) text += " " + std::to_string(instr.b);
  return text;
}

void trace(const pl0plus::MachineState& state, const pl0plus::Instruction& executed) {
  std::cerr << "p=" << state.p << " b=" << state.b << " t=" << state.t
            << " instr=" << describe(executed) << " pila=[";
  std::int32_t first = state.t > 4 ? state.t - 3 : 1;
  for (std::int32_t i = first; i <= state.t; ++i) {
    if (i > first) std::cerr << ' ';
    std::cerr << state.stack[static_cast<std::size_t>(i)];
  }
  std::cerr << "]\n";
}

void wait_for_enter() {
  int c;
  while ((c = std::cin.get()) != EOF && c != '\n') {
  }
}

}  // namespace

int main(int argc, char** argv) {
  bool debug = false;
  std::string path;
  for (int i = 1; i < argc; ++i) {
    std::string arg = argv[i];
    if (arg == "-a" || arg == "--ayuda") {
      std::cout << kHelp;
      return 0;
    }
    if (arg == "-d" || arg == "--depurar") {
      debug = true;
      continue;
    }
    if (arg.size() > 1 && arg[0] == '-') {
      std::cerr << "error: opción desconocida: " << arg << '\n' << kHelp;
      return 2;
    }
    if (!path.empty()) {
      std::cerr << "error: más de un archivo de entrada\n" << kHelp;
      return 2;
    }
    path = arg;
  }
  if (path.empty()) {
    std::cerr << "error: falta el archivo objeto\n" << kHelp;
    return 2;
  }

  std::ifstream in(path, std::ios::binary);
  if (!in) {
    std::cerr << "no se puede leer el archivo: " << path << '\n';
    return 2;
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();

  pl0plus::ObjectParseResult object = pl0plus::parse_object_text(buffer.str());
  if (object.log.has_errors()) {
    std::cerr << render_text(object.log);
    return 2;
  }

  pl0plus::MachineState state = pl0plus::load(std::move(object.code));
  pl0plus::IoPorts io{
      []() -> std::optional<std::int32_t> {
        std::int32_t value = 0;
        if (std::cin >> value) return value;
        return std::nullopt;
      },
      [](std::int32_t value) { std::cout << value << '\n'; },
  };

  if (debug) {
    while (state.running()) {
      const pl0plus::Instruction executed =
          state.code[static_cast<std::size_t>(state.p)];
      pl0plus::step(state, io);
      trace(state, executed);
      wait_for_enter();
    }
  } else {
    pl0plus::run(state, io, std::numeric_limits<std::int64_t>::max());
  }

  if (state.faulted) {
    std::cerr << "falla en la dirección " << state.fault_address << ": "
              << state.fault_message << '\n';
    return 1;
  }
  return 0;
}
