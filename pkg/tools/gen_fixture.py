#!/usr/bin/env python3
"""Generate the synthetic tweet fixture and case-count table used by tests.

Produces a 205-row JSONL corpus that loads to exactly 200 records: 200
distinct valid tweets, 2 duplicate ids (kept-first semantics), and 3
malformed rows (missing timestamp, empty text, non-alpha-2 country), so
the loader's row accounting is exercised by the golden files. Tweets
are composed from sentiment-cue snippets and neutral fillers, decorated
with urls, mentions, hashtags, slang, and emoji, and spread over five
countries and seventeen months. Everything is driven by a fixed seed;
rerunning the script reproduces the committed files byte for byte.

Usage: python tools/gen_fixture.py [--out-dir tests/fixtures]
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from pathlib import Path

SEED = 20210615

COUNTRIES = ["AU", "IN", "JP", "BR", "ID"]
MONTHS = [f"2020-{m:02d}" for m in range(3, 13)] + [f"2021-{m:02d}" for m in range(1, 8)]

# one snippet pool per sentiment; each snippet contains at least one cue
# word for exactly that sentiment and none for the others
CUE_SNIPPETS = {
    "Optimistic": [
        "good news from the trial site",
        "great progress this week",
        "i hope this finally turns the corner",
        "feeling hopeful about the second dose",
        "recovery numbers keep climbing",
        "promising results so far",
    ],
    "Thankful": [
        "thank you to every nurse on shift",
        "so thankful for the volunteers",
        "grateful my parents got their jab",
        "huge thanks to the clinic staff",
        "appreciate everyone keeping the line moving",
    ],
    "Empathetic": [
        "prayers for the families affected",
        "praying for everyone still waiting",
        "sympathy to those who cannot travel home",
        "condolences to the crews working the wards",
        "solidarity with the folks in lockdown",
    ],
    "Pessimistic": [
        "this feels hopeless honestly",
        "we are doomed if supply stalls again",
        "pointless queueing when doses run out",
        "things only get worse every month",
    ],
    "Anxious": [
        "worried about the new variant",
        "so anxious before my appointment",
        "scared of needles but going anyway",
        "afraid the border rules change again",
        "the wait makes me nervous",
    ],
    "Sad": [
        "sad watching the ward reports",
        "heartbroken for the families",
        "my neighbour died last month",
        "crying at the news again",
        "tragic week for the region",
    ],
    "Annoyed": [
        "annoyed at the booking site crashing",
        "the queue system is ridiculous",
        "angry about the cancelled slots",
        "ugh the hotline hung up on me twice",
        "frustrated with the changing advice",
    ],
    "Denial": [
        "this whole thing is a hoax",
        "fake numbers if you ask me",
        "what a scam these passes are",
        "stop spreading lies about the jab",
        "just another conspiracy theory",
    ],
    "OfficialReport": [
        "update from the health ministry",
        "breaking new shipment cleared customs",
        "officials announced extra clinics",
        "weekly report shows doses administered",
        "statement confirmed second doses start monday",
        "rollout reaches regional towns",
    ],
    "Surprise": [
        "wow did not expect walk-ins today",
        "shocked the line was this short",
        "surprised my booking moved up a month",
        "unbelievable turnout at the stadium hub",
    ],
    "Joking": [
        "lol my arm is 5g enabled now",
        "haha got the sticker and the magnet joke going",
        "my second dose gave me wifi lmao",
        "told the joke about microchips again",
        "funny how brave i am after the fact",
    ],
}

# cue-free fillers; no cue words and no polarity-lexicon words that would
# dominate the naive score
NEUTRAL_FILLERS = [
    "waiting at the clinic with my mum",
    "second slot booked for next tuesday",
    "the line wrapped around the car park",
    "brought a book for the observation window",
    "the nurse asked about allergies first",
    "paperwork took about ten minutes",
    "watching the charts on tv tonight",
    "my workplace sorted the forms for us",
    "drove an hour to the regional hub",
    "both my parents are booked in",
    "the stadium hub runs until nine",
    "masks still required on the bus",
]

URLS = [
    "https://example.com/vax",
    "http://news.example.org/rollout?src=tw",
    "www.clinicfinder.example/au",
]
MENTIONS = ["@healthdept", "@local_news", "@DrSmith", "@who"]
HASHTAGS = ["#covid19vax", "#rollout", "#socialdistance", "#getvaccinated"]
SLANG = ["omg", "tbh", "rt", "fwiw", "imo", "btw", "ppl", "govt"]
EMOJIS = ["☺", "☻", "\U0001f60a", "\U0001f642", "☹", "\U0001f641"]

# weights roughly matching a real corpus: most tweets carry one or two labels
LABEL_COUNT_CHOICES = [0, 1, 1, 1, 1, 1, 2, 2, 2, 3]


def compose_text(rng: random.Random) -> str:
    n_labels = rng.choice(LABEL_COUNT_CHOICES)
    labels = rng.sample(sorted(CUE_SNIPPETS), n_labels)
    parts = [rng.choice(CUE_SNIPPETS[label]) for label in labels]
    parts.append(rng.choice(NEUTRAL_FILLERS))
    rng.shuffle(parts)
    if rng.random() < 0.30:
        parts.insert(0, rng.choice(SLANG))
    text = " ".join(parts)
    if rng.random() < 0.25:
        text = f"{rng.choice(MENTIONS)} {text}"
    if rng.random() < 0.40:
        text = f"{text} {rng.choice(HASHTAGS)}"
    if rng.random() < 0.30:
        text = f"{text} {rng.choice(URLS)}"
    if rng.random() < 0.20:
        text = f"{text} {rng.choice(EMOJIS)}"
    if rng.random() < 0.15:
        text = text.upper()
    return text


def make_rows(rng: random.Random) -> list[dict]:
    rows = []
    for i in range(200):
        month = rng.choice(MONTHS)
        day = rng.randint(1, 28)
        hour = rng.randint(0, 23)
        minute = rng.randint(0, 59)
        country = rng.choice(COUNTRIES) if rng.random() >= 0.10 else None
        rows.append(
            {
                "id": f"t{i + 1:04d}",
                "created_at": f"{month}-{day:02d}T{hour:02d}:{minute:02d}:00Z",
                "country": country,
                "text": compose_text(rng),
            }
        )
    # two duplicate ids with different bodies; loader keeps the first
    for dup_index in (24, 137):
        dup = dict(rows[dup_index])
        dup["text"] = "duplicate payload that must be dropped"
        rows.append(dup)
    # three malformed rows the loader must reject
    rows.append({"id": "bad1", "country": "AU", "text": "missing timestamp"})
    rows.append({"id": "bad2", "created_at": "2021-03-04T10:00:00Z", "country": "IN", "text": ""})
    rows.append(
        {
            "id": "bad3",
            "created_at": "2021-03-04T10:00:00Z",
            "country": "Australia",
            "text": "country not alpha-2",
        }
    )
    return rows


def make_cases(rng: random.Random) -> list[tuple[str, str, int]]:
    rows = []
    for country in COUNTRIES:
        level = rng.randint(200, 2000)
        for month in MONTHS:
            level = max(0, int(level * rng.uniform(0.7, 1.5)))
            rows.append((country, month, level))
    return rows


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--out-dir", default="tests/fixtures")
    args = parser.parse_args(argv)
    out = Path(args.out_dir)
    out.mkdir(parents=True, exist_ok=True)

    rng = random.Random(SEED)
    rows = make_rows(rng)
    with open(out / "tweets.jsonl", "w", encoding="utf-8") as fh:
        for row in rows:
            fh.write(json.dumps(row, ensure_ascii=False) + "\n")

    with open(out / "cases.csv", "w", encoding="utf-8") as fh:
        fh.write("country,month,new_cases\n")
        for country, month, cases in make_cases(rng):
            fh.write(f"{country},{month},{cases}\n")

    print(f"wrote {len(rows)} tweet rows and case counts to {out}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
