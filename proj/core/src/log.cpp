/*
   Copyright 2026 The dtlsum Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "dtlsum/log.hpp"

#include <iostream>
#include <mutex>

namespace dtlsum {

namespace {

std::mutex& log_mutex() {
    static std::mutex m;
    return m;
}

LogSink& sink() {
    static LogSink s = [](const std::string& msg) { std::clog << "dtlsum: " << msg << '\n'; };
    return s;
}

}  // namespace

void set_log_sink(LogSink s) {
    std::lock_guard<std::mutex> lock(log_mutex());
    sink() = std::move(s);
}

void log_note(const std::string& message) {
    std::lock_guard<std::mutex> lock(log_mutex());
    if (sink()) sink()(message);
}

}  // namespace dtlsum
