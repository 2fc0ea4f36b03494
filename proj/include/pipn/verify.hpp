#pragma once

#include <chrono>
#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "pipn/canonical.hpp"
#include "pipn/diagram.hpp"
#include "pipn/presentation.hpp"
#include "pipn/word.hpp"

namespace pipn {

  struct Failure {
    std::string      family;
    std::vector<int> indices;
    std::string      lhs;  // serialized diagrams, or a description
    std::string      rhs;
  };

  struct VerificationReport {
    std::string                   suite;
    int                           n = 0;
    std::size_t                   families_checked = 0;
    std::size_t                   instances_checked = 0;
    std::vector<Failure>          failures;
    std::chrono::duration<double> elapsed{0};

    bool pass() const noexcept {
      return failures.empty();
    }

    // family <TAB> indices <TAB> lhs <TAB> rhs, one line per failure.
    std::string tsv() const;
    std::string summary() const;
  };

  // Every element of PIP_n in canonical order; 1 <= n <= 5.
  std::vector<Diagram> enumerate_pip(int n);

  // Sum over a, b of C(n,a) C(n,b) B(a,b), B(a,b) = sum_k k! S(a,k) S(b,k).
  // Throws std::overflow_error past 64 bits.
  std::uint64_t count_pip(int n);
  // B(n,n): the point free elements.
  std::uint64_t count_point_free(int n);

  // Right multiplication closure of gens u {identity}; n <= 5.
  std::vector<Diagram> closure(int n, std::vector<Diagram> const& gens);

  // s_1, ..., s_{n-1}, r_1, l_1.
  std::vector<Diagram> standard_generators(int n);

  // Uniform letters, length uniform in 0..max_len.
  Word random_word(int n, std::size_t max_len, std::mt19937_64& rng);

  // alpha sigma = alpha for alpha the sigma free part of an extracted
  // canonical word and sigma a transposition in its stabilizer. Every element
  // for n <= 4, a sample for larger n.
  std::vector<RelationInstance> stabilizer_instances(int n, std::uint64_t seed = 0x5eed);

  VerificationReport check_instances(int n, std::string suite,
                                     std::vector<RelationInstance> const& instances);
  // n in 3..5.
  VerificationReport check_relations(int n);
  VerificationReport check_derived(int n, std::uint64_t seed = 0x5eed);

  using Extractor = std::function<CanonicalWord(Diagram const&)>;

  // Generation, extraction round trip, equivalence versus equality on all
  // pairs (n == 3) and normalize versus extraction on random words; n in 3..4.
  VerificationReport isomorphism_report(int n, Extractor const& extract = canonical_of_diagram,
                                        std::size_t random_words = 10000,
                                        std::uint64_t seed = 0x5eed);

}  // namespace pipn
