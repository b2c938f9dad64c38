#!/usr/bin/env python3
#
# Copyright 2026 The Camo Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
#
"""Generates the bundled synthetic corpus in data/corpus.

Binary labels: 1 for misleading, sensational posts and 0 for sober news
reporting. Each text mixes class-indicative words with shared topic
vocabulary and a small amount of label noise, so a character n-gram model
learns it well but not perfectly.
"""

import argparse
import json
import pathlib
import random

MISLEADING = """
shocking hoax exposed secret conspiracy miracle cure banned hidden truth
cover-up lies scandal fraud rigged fake propaganda censored whistleblower
bombshell outrageous insane unbelievable terrifying deadly poison toxic
sheeple agenda globalist elites puppet brainwashed mainstream sellout
leaked suppressed forbidden outraged betrayal treason criminal corrupt
fabricated staged crisis actors microchips chemtrails depopulation plandemic
tyranny mandates shameful disgusting horrifying wake share before deleted
they dont want you know viral exposed truthers patriots awaken nightmare
evil cabal sinister scheme plot insiders smoking gun coverup mysterious
silenced disaster catastrophic collapse doomed apocalypse invasion
""".split()

RELIABLE = """
according report study published researchers analysis official statement
announced confirmed data survey percent quarterly estimate preliminary
department ministry agency spokesperson committee council university journal
peer reviewed evidence findings results trial participants sample methodology
statistics indicates suggests approximately measured observed recorded
regional national budget infrastructure legislation amendment hearing
testimony briefing conference interview correspondent editorial coverage
updated revised forecast projected moderate gradual modest steady decline
increase improvement assessment evaluation monitoring inspection compliance
guidelines recommendation framework initiative program funding allocated
""".split()

TOPICS = """
vaccine vaccines election elections climate weather government president
senator governor mayor police hospital doctors nurses patients school teachers
students parents children economy inflation prices market banks taxes workers
farmers water energy electricity fuel gasoline pharmacy medicine virus
pandemic border immigration military soldiers court judge lawyers internet
phones technology company companies factory airport flights train highway
bridge city village county state country europe america africa asia ocean
river forest wildlife drought flood earthquake wildfire storm hurricane
harvest food restaurant supermarket housing rents mortgage pension retirement
television newspaper website platform video footage photos documents emails
scientists experts officials authorities residents citizens voters community
""".split()

VERBS = """
reveals shows claims says warns admits denies confirms reports finds
discovers announces explains describes suggests blocks hides releases
approves rejects launches plans promises expects demands questions
""".split()

FUNCTION = """
the a an of in on for to with about from by at after before over under
this that these those their our your its and but or while because when
""".split()


def make_text(rng, label):
  own = MISLEADING if label == 1 else RELIABLE
  other = RELIABLE if label == 1 else MISLEADING
  n_content = rng.randint(8, 26)
  words = []
  for _ in range(n_content):
    r = rng.random()
    if r < 0.34:
      words.append(rng.choice(own))
    elif r < 0.40:
      words.append(rng.choice(other))
    elif r < 0.85:
      words.append(rng.choice(TOPICS))
    else:
      words.append(rng.choice(VERBS))
  out = []
  for w in words:
    if rng.random() < 0.45:
      out.append(rng.choice(FUNCTION))
    out.append(w)
  if out:
    out[0] = out[0].capitalize()
  return " ".join(out) + "."


def make_split(rng, n, start, noise):
  records = []
  seen = set()
  while len(records) < n:
    label = rng.randint(0, 1)
    text = make_text(rng, label)
    if text in seen:
      continue
    seen.add(text)
    if rng.random() < noise:
      label = 1 - label
    records.append({"id": "d%05d" % (start + len(records)), "text": text,
                    "label": label})
  return records


def main():
  parser = argparse.ArgumentParser(description=__doc__)
  parser.add_argument("--outdir", default="data/corpus")
  parser.add_argument("--train", type=int, default=4000)
  parser.add_argument("--test", type=int, default=1000)
  parser.add_argument("--noise", type=float, default=0.05)
  parser.add_argument("--seed", type=int, default=20240101)
  args = parser.parse_args()

  rng = random.Random(args.seed)
  outdir = pathlib.Path(args.outdir)
  outdir.mkdir(parents=True, exist_ok=True)
  train = make_split(rng, args.train, 0, args.noise)
  test = make_split(rng, args.test, args.train, args.noise)
  train_texts = {r["text"] for r in train}
  test = [r for r in test if r["text"] not in train_texts]
  for name, records in (("train.jsonl", train), ("test.jsonl", test)):
    with open(outdir / name, "w", encoding="utf-8", newline="\n") as f:
      for r in records:
        f.write(json.dumps(r, ensure_ascii=False) + "\n")


if __name__ == "__main__":
  main()
