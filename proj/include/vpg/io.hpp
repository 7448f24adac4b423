#pragma once

#include <stdexcept>
#include <string>

#include "vpg/certificates.hpp"
#include "vpg/geometry.hpp"
#include "vpg/graph.hpp"

namespace vpg {

struct ParseError : std::runtime_error {
  int line;
  ParseError(int line_no, const std::string& msg)
      : std::runtime_error("line " + std::to_string(line_no) + ": " + msg),
        line(line_no) {}
};

std::string serialize_representation(const Representation& rep);
Representation parse_representation(const std::string& text);

std::string serialize_decomposition(const Decomposition& d,
                                    const std::string& source_digest);
/// Returns the decomposition and the recorded source digest.
std::pair<Decomposition, std::string> parse_decomposition(const std::string& text);

std::string serialize_solution(const Solution& s);
Solution parse_solution(const std::string& text);

/// FNV-1a 64-bit digest, 16 hex characters.
std::string digest(const std::string& bytes);

std::string read_file(const std::string& path);
/// Writes via a temp file in the same directory, then renames.
void write_file_atomic(const std::string& path, const std::string& content);

/// The declared class of a representation, as written in instance files.
std::string class_name(const RepFlags& flags);
RepFlags flags_from_class(const std::string& name);
RepClass rep_class_from_name(const std::string& name);

}  // namespace vpg
