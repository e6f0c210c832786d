#pragma once

#include "hankel/hankel_spec.hpp"

#include <Eigen/Core>

#include <filesystem>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace hankel::cli {

/// Exit codes shared by every subcommand.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitAllStartsFailed = 2;

/// Vectors above this dimension are left out of result JSON.
inline constexpr Index kInlineVectorLimit = 10'000;

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// argv-free entry point; args[0] is the program name.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

/// Reads a generator from a text file (one number per line) or a JSON file
/// {"m": M, "n": N, "v": [...]}. Order and dimension given here must agree
/// with the file when it carries them.
HankelSpec read_generator_file(const std::filesystem::path& path,
                               std::optional<int> order,
                               std::optional<Index> dim);

/// Binary vector file: "HNKV", u32 version = 1, u64 length, then
/// little-endian float64 entries.
void write_vector_file(const std::filesystem::path& path,
                       const Eigen::VectorXd& x);
Eigen::VectorXd read_vector_file(const std::filesystem::path& path);

/// Writes `contents` to a sibling temporary file and renames it into place.
void write_file_atomically(const std::filesystem::path& path,
                           const std::string& contents);

/// %.17g
std::string format_double(double value);

}  // namespace hankel::cli
