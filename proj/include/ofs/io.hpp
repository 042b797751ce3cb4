#ifndef OFS_IO_HPP
#define OFS_IO_HPP

#include <string>

#include "ofs/structure.hpp"

// JSON documents for face structures.  Keys: "faces" (dimension string ->
// list of names), "gamma" (name -> name), "delta" (name -> list of names,
// or {"empty": base-name}), "tilde" (dimension string -> list of [a, b]
// pairs), and an optional "relaxed_top" flag for interface structures.
// Printing uses sorted keys and stored face order, so print-parse-print is
// bit-exact.

namespace ofs {

// Throws OfsError("InvalidInput", ...) naming the offending key on parse
// errors; build errors propagate with their own codes.
Ofs read_structure(const std::string& json_text);
Ofs read_structure_file(const std::string& path);

// Newline-terminated JSON.
std::string write_structure(const Ofs& s);

}  // namespace ofs

#endif
