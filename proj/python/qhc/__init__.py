# Copyright 2026 The QHC Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Quantum kernel compiler, runtime and TFD workload."""

from ._qhc import (
    CompileResult,
    Image,
    QhcError,
    Session,
    Toolchain,
    minimize,
    tfd,
)


def compile(source, opt_level=1, target=None):
    """Compile .qk source text; returns a CompileResult."""
    return Toolchain().compile(source, opt_level=opt_level, target=target)


__all__ = [
    "CompileResult",
    "Image",
    "QhcError",
    "Session",
    "Toolchain",
    "compile",
    "minimize",
    "tfd",
]
