#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace conceptdim {

// Reads a whole file; throws InvalidInputError if it cannot be opened.
std::string read_file(const std::string& path);

// Whole-file atomic write: writes to a temp file in the same directory and
// renames it over the target.
void atomic_write_file(const std::string& path, std::string_view content);

// Byte offset of the first invalid UTF-8 sequence, or nullopt if valid.
std::optional<std::size_t> find_invalid_utf8(std::string_view text);

std::vector<std::string> split_lines(std::string_view text);
std::string_view trim(std::string_view s);

// Shortest round-trip decimal form of a double (matches JSON output).
std::string double_to_string(double value);

// Runs fn(0..n-1), statically partitioned over at most `threads` workers.
// Results must be written to disjoint slots; the partition is deterministic.
void parallel_for_index(std::size_t n, std::size_t threads,
                        const std::function<void(std::size_t)>& fn);

// Parallelism cap from the CONCEPTDIM_THREADS environment variable, falling
// back to the hardware concurrency.
std::size_t configured_thread_count();

}  // namespace conceptdim
