#pragma once

#include <bit>
#include <cstdint>
#include <cstring>
#include <string>
#include <vector>

#include "steallab/util.hpp"

namespace steallab {

uint32_t crc32(const void* data, size_t len, uint32_t seed = 0);

inline uint32_t crc32(const std::string& s) { return crc32(s.data(), s.size()); }

uint64_t fnv1a64(const void* data, size_t len);

inline uint64_t fnv1a64(const std::string& s) { return fnv1a64(s.data(), s.size()); }

std::string to_hex(uint64_t v);

// Little-endian binary buffer writer/reader for the on-disk formats.
// Buffers are assembled in memory so the trailing checksum can cover
// everything before it.
class ByteWriter {
public:
    void u8(uint8_t v) { buf_.push_back(static_cast<char>(v)); }
    void u32(uint32_t v);
    void u64(uint64_t v);
    void f64(double v);
    void bytes(const void* p, size_t n);
    void str(const std::string& s);  // u64 length prefix + raw bytes
    void f64_array(const std::vector<double>& v);
    void u32_array(const std::vector<uint32_t>& v);

    const std::string& data() const { return buf_; }
    std::string take() { return std::move(buf_); }

private:
    std::string buf_;
};

class ByteReader {
public:
    explicit ByteReader(const std::string& buf) : buf_(buf) {}

    uint8_t u8();
    uint32_t u32();
    uint64_t u64();
    double f64();
    std::string str();
    std::vector<double> f64_array(size_t count);
    std::vector<uint32_t> u32_array(size_t count);
    size_t offset() const { return pos_; }
    size_t remaining() const { return buf_.size() - pos_; }

private:
    void need(size_t n);
    const std::string& buf_;
    size_t pos_ = 0;
};

std::string read_file_bytes(const std::string& path);
void write_file_bytes(const std::string& path, const std::string& bytes);

// Writes payload followed by crc32(payload); load verifies and strips it.
void write_file_checksummed(const std::string& path, const std::string& payload);
std::string read_file_checksummed(const std::string& path);

}  // namespace steallab
