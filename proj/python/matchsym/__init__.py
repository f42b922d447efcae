# Copyright 2026 The matchsym Authors.
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

"""Matchings, short chords and Schur expansions."""

import json as _json

from ._matchsym import *  # noqa: F401,F403
from ._matchsym import run as _run


def run_json(command, *args, **kwargs):
    """Run a CLI command in process and return (exit_code, parsed JSON)."""
    code, text = _run(command, [str(a) for a in args], **kwargs)
    return code, _json.loads(text)
