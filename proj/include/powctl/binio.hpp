#pragma once

#include <bit>
#include <cstdint>
#include <cstring>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace powctl {

// Little-endian primitives for the on-disk formats. Throws std::runtime_error
// with the expected/actual byte counts on short reads.

void write_bytes(std::ostream& os, const void* data, std::size_t n);
void read_bytes(std::istream& is, void* data, std::size_t n, const std::string& what);

void write_u8(std::ostream& os, std::uint8_t v);
void write_u32(std::ostream& os, std::uint32_t v);
void write_u64(std::ostream& os, std::uint64_t v);
void write_f64(std::ostream& os, double v);
void write_f64_span(std::ostream& os, std::span<const double> v);

std::uint8_t read_u8(std::istream& is, const std::string& what);
std::uint32_t read_u32(std::istream& is, const std::string& what);
std::uint64_t read_u64(std::istream& is, const std::string& what);
double read_f64(std::istream& is, const std::string& what);
void read_f64_span(std::istream& is, std::span<double> v, const std::string& what);

}  // namespace powctl
