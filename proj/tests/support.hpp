#pragma once

#include <fstream>
#include <random>
#include <sstream>
#include <string>

#include "sullivan/dsl.hpp"

namespace testing {

inline std::string read_corpus(const std::string& file) {
  std::ifstream in(std::string(SULLIVAN_CORPUS_DIR) + "/" + file);
  if (!in) throw std::runtime_error("missing corpus file " + file);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline sullivan::Document corpus(const std::string& file) { return sullivan::parse(read_corpus(file)); }

inline const char* const kCorpusFiles[] = {"E54.sul", "E53.sul", "CP3.sul", "S2-fiber-gap.sul",
                                           "wedge-S3S3-odd-fiber.sul", "spheres.sul", "lie.sul"};

inline sullivan::Polynomial P(const sullivan::SullivanAlgebra& alg, std::string_view text) {
  return sullivan::parse_polynomial(text, alg.context());
}

}  // namespace testing
