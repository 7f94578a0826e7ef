#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace ralad {

// 64-bit FNV-1a; fixed constants so hashes are stable across platforms.
std::uint64_t fnv1a64(std::string_view data);

// CRC-32 (IEEE, reflected 0xEDB88320), as used by the index file trailer.
std::uint32_t crc32(const void* data, std::size_t len);

std::string to_hex(std::uint64_t value);

bool is_valid_utf8(std::string_view text);

std::string lower_ascii(std::string_view text);

// Lines without their terminators; a trailing newline does not add an empty line.
std::vector<std::string_view> split_lines(std::string_view text);

std::string trim(std::string_view text);

// Glob over '/'-separated relative paths. '*' and '?' stay within one path
// segment; a '**' segment matches any number of segments (including zero).
bool glob_match(std::string_view pattern, std::string_view path);

std::string read_text_file(const std::filesystem::path& path);

// Write via temp file + rename so readers never observe a partial file.
void write_file_atomic(const std::filesystem::path& path, std::string_view content);

std::string format_fixed(double value, int decimals);

// Replace {key} placeholders; unknown placeholders are left untouched.
std::string substitute_placeholders(std::string templ,
                                    const std::map<std::string, std::string>& values);

struct SplitUrl {
    std::string origin;  // scheme://host[:port]
    std::string path;    // leading '/', possibly with query
};

// Splits "http(s)://host:port/path" into origin and path. Throws ConfigError
// on anything that does not look like an http(s) URL.
SplitUrl split_url(const std::string& url);

struct CommandResult {
    int exit_code = -1;
    bool timed_out = false;
};

// Runs `sh -c cmd` in workdir with stdout+stderr redirected to log_path.
// timeout_s <= 0 means no timeout; on timeout the process group is killed.
CommandResult run_command(const std::string& cmd, const std::filesystem::path& workdir,
                          double timeout_s, const std::filesystem::path& log_path);

}  // namespace ralad
