// Copyright 2026 The shardbatch Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef SHARDBATCH_STATUS_HPP_
#define SHARDBATCH_STATUS_HPP_

#include <optional>
#include <string>
#include <string_view>
#include <utility>

namespace shardbatch {

enum class ErrorCode {
  kOk = 0,
  kInvalidArgument,    // malformed input (bad filter, bad flag value, ...)
  kNotFound,           // unknown collection / missing entity
  kConflict,           // duplicate name, endpoint mismatch, lock held
  kPreconditionFailed, // operation ordering violated (e.g. no shards yet)
  kAuthDenied,         // cluster token missing or wrong
  kProtocolError,      // malformed frame or envelope
  kOversize,           // frame body above the wire limit
  kStaleVersion,       // caller's shard map is older than the server's
  kInvalidSplit,       // split key on or outside the chunk boundary
  kNodeDown,           // connection refused / peer vanished
  kTimeout,            // no response within the deadline
  kUnavailable,        // config/cluster unreachable
  kPartialResults,     // a scatter-gather leg failed mid-stream
  kStorageError,       // unrecoverable disk state
  kIoError,            // file write/rename failure
  kInvalidState,       // handle not in the required lifecycle state
  kUnsupported,        // e.g. ordered insertMany
};

std::string_view error_code_name(ErrorCode code);
std::optional<ErrorCode> error_code_from_name(std::string_view name);

class Status {
 public:
  Status() : code_(ErrorCode::kOk) {}
  Status(ErrorCode code, std::string message)
      : code_(code), message_(std::move(message)) {}

  static Status Ok() { return Status(); }

  bool ok() const { return code_ == ErrorCode::kOk; }
  ErrorCode code() const { return code_; }
  const std::string& message() const { return message_; }

  std::string to_string() const {
    if (ok()) return "ok";
    std::string s(error_code_name(code_));
    if (!message_.empty()) {
      s += ": ";
      s += message_;
    }
    return s;
  }

 private:
  ErrorCode code_;
  std::string message_;
};

// Value-or-status, in the spirit of StatusOr. The value is only
// accessible when status().ok().
template <typename T>
class Result {
 public:
  Result(T value) : value_(std::move(value)) {}  // NOLINT(google-explicit-constructor)
  Result(Status status) : status_(std::move(status)) {}  // NOLINT

  bool ok() const { return status_.ok(); }
  const Status& status() const { return status_; }

  T& value() & { return *value_; }
  const T& value() const& { return *value_; }
  T&& value() && { return std::move(*value_); }

  T* operator->() { return &*value_; }
  const T* operator->() const { return &*value_; }

 private:
  Status status_;
  std::optional<T> value_;
};

}  // namespace shardbatch

#endif  // SHARDBATCH_STATUS_HPP_
