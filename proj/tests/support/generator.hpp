#ifndef PL0PLUS_TESTS_GENERATOR_HPP
#define PL0PLUS_TESTS_GENERATOR_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "pl0plus/token.hpp"

namespace pl0plus::testsup {

struct GeneratedProgram {
  std::string source;
  int read_count = 0;  // read statements; each executes at most once
};

/// Random well-formed pl0+ program, deterministic per seed.
///
/// The programs are semantically clean (every name declared before use, no
/// duplicates per scope) and always terminate: every while counts a
/// dedicated variable down to zero and its body never reassigns it, calls
/// only go to procedures whose declaration is already complete (so the call
/// graph is a DAG), and loop bodies contain no calls or reads. Block
/// nesting stays at three levels or less and a program has at most thirty
/// statements. Arithmetic faults (division by zero, overflow) are possible
/// and intentional.
GeneratedProgram generate_program(std::uint32_t seed);

/// Random token list with plausible positions. Not necessarily a sentence
/// of the grammar; exercises serialization, not parsing.
std::vector<Token> generate_tokens(std::uint32_t seed, int count);

/// Input vector covering every read the generated program can perform.
std::vector<std::int32_t> generate_input(std::uint32_t seed, int read_count);

}  // namespace pl0plus::testsup

#endif
