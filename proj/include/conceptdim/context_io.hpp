#pragma once

#include <iosfwd>
#include <string>

#include "conceptdim/context.hpp"

namespace conceptdim {

// Burmeister CXT format, strict: "B", blank line, |G|, |M|, blank line,
// object names, attribute names, then one '.'/'X' row per object. Newlines
// are LF only; trailing whitespace anywhere is rejected. write_cxt emits the
// canonical form, so read followed by write is byte-identical.
FormalContext read_cxt(std::istream& in);
FormalContext read_cxt_file(const std::string& path);
std::string to_cxt_string(const FormalContext& context);
void write_cxt_file(const std::string& path, const FormalContext& context);

// CSV variant: header of attribute names (first cell blank), one row per
// object with its name in the first column and cells in {0,1}.
FormalContext read_context_csv(std::istream& in);
FormalContext read_context_csv_file(const std::string& path);
std::string to_context_csv_string(const FormalContext& context);
void write_context_csv_file(const std::string& path, const FormalContext& context);

}  // namespace conceptdim
