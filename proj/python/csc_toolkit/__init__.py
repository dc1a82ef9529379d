# Copyright 2026 The CSC Toolkit Authors.
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
"""Compression-rate controlled cross-lingual summarization toolkit."""

from ._core import (
    CscError,
    InputError,
    bin_interval,
    bleu,
    gamma_schedule,
    length_variance,
    normalize,
    num_bins,
    quantize,
    rouge_l,
    rouge_n,
    run_cli,
    select_salient,
    synth_corpus,
    tokenize,
)

__all__ = [
    "CscError",
    "InputError",
    "bin_interval",
    "bleu",
    "gamma_schedule",
    "length_variance",
    "normalize",
    "num_bins",
    "quantize",
    "rouge_l",
    "rouge_n",
    "run_cli",
    "select_salient",
    "synth_corpus",
    "tokenize",
]
