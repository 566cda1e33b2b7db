#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace netfc {

/// Base class for all library errors.
class error : public std::runtime_error {
public:
    explicit error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Input rows / series that cannot be interpreted (bad CSV row, bad field).
class malformed_row : public error {
public:
    explicit malformed_row(std::size_t line_no)
        : error("malformed row at line " + std::to_string(line_no)), line_no_(line_no) {}
    std::size_t line_no() const { return line_no_; }

private:
    std::size_t line_no_;
};

class empty_input : public error {
public:
    empty_input() : error("empty input") {}
};

class non_monotonic_part : public error {
public:
    explicit non_monotonic_part(std::size_t part_index)
        : error("capture part " + std::to_string(part_index) + " is not time-sorted"),
          part_index_(part_index) {}
    std::size_t part_index() const { return part_index_; }

private:
    std::size_t part_index_;
};

class too_short : public error {
public:
    explicit too_short(const std::string& what) : error("series too short: " + what) {}
};

class zero_variance : public error {
public:
    zero_variance() : error("series has zero variance") {}
};

class singular_design : public error {
public:
    singular_design() : error("regression design matrix is rank-deficient") {}
};

class length_mismatch : public error {
public:
    length_mismatch(std::size_t a, std::size_t b)
        : error("length mismatch: " + std::to_string(a) + " vs " + std::to_string(b)) {}
};

class empty_orders : public error {
public:
    empty_orders() : error("no ARMA orders supplied") {}
};

/// A fit error raised inside a backtest, annotated with the origin index.
class fit_failure : public error {
public:
    fit_failure(std::size_t origin, const std::string& cause)
        : error("fit failed at origin " + std::to_string(origin) + ": " + cause),
          origin_(origin) {}
    std::size_t origin() const { return origin_; }

private:
    std::size_t origin_;
};

class io_error : public error {
public:
    explicit io_error(const std::string& path) : error("I/O failure on " + path), path_(path) {}
    const std::string& path() const { return path_; }

private:
    std::string path_;
};

} // namespace netfc
