#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace olp {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
public:
	using std::runtime_error::runtime_error;
};

/// Malformed input text; line and column are 1-based.
class ParseError : public Error {
public:
	ParseError(std::size_t line, std::size_t col, const std::string& message);
	std::size_t line() const noexcept { return line_; }
	std::size_t column() const noexcept { return col_; }
	const std::string& message() const noexcept { return message_; }
private:
	std::size_t line_;
	std::size_t col_;
	std::string message_;
};

/// Errors that stem from the meaning of a well-formed input.
class SemanticError : public Error {
public:
	using Error::Error;
};

class CyclicOrder : public SemanticError {
public:
	explicit CyclicOrder(const std::string& name);
};

class UnknownRuleName : public SemanticError {
public:
	explicit UnknownRuleName(const std::string& name);
};

class DuplicateRuleName : public SemanticError {
public:
	explicit DuplicateRuleName(const std::string& name);
};

class CapExceeded : public SemanticError {
public:
	CapExceeded(const std::string& what, std::size_t size, std::size_t cap);
	std::size_t size() const noexcept { return size_; }
	std::size_t cap() const noexcept { return cap_; }
private:
	std::size_t size_;
	std::size_t cap_;
};

class NotAnswerSet : public SemanticError {
public:
	NotAnswerSet();
};

class NotNormal : public SemanticError {
public:
	explicit NotNormal(const std::string& rule);
};

class NotTotal : public SemanticError {
public:
	NotTotal();
};

class NotPrerequisiteFree : public SemanticError {
public:
	explicit NotPrerequisiteFree(const std::string& rule);
};

class NonStrictDynamicOrder : public SemanticError {
public:
	explicit NonStrictDynamicOrder(const std::string& detail);
};

/// Raised for values that violate a type invariant (bad identifier, reserved functor, ...).
class InvalidArgument : public Error {
public:
	using Error::Error;
};

} // namespace olp
