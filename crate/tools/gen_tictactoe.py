#!/usr/bin/env python3
"""Regenerate data/tic_tac_toe.csv by exhaustive game-tree enumeration.

Enumerates every distinct final board of tic-tac-toe with x moving first,
where play stops as soon as a line is completed or the board is full. The
class is `positive` when x holds a completed line, `negative` otherwise
(draws and o wins). The well-known tally is 958 boards: 626 positive, 332
negative.
"""

from pathlib import Path

LINES = [
    (0, 1, 2), (3, 4, 5), (6, 7, 8),
    (0, 3, 6), (1, 4, 7), (2, 5, 8),
    (0, 4, 8), (2, 4, 6),
]

COLUMNS = [
    "top-left", "top-middle", "top-right",
    "middle-left", "middle-middle", "middle-right",
    "bottom-left", "bottom-middle", "bottom-right",
]


def winner(board):
    for a, b, c in LINES:
        if board[a] != "b" and board[a] == board[b] == board[c]:
            return board[a]
    return None


def enumerate_finals():
    finals = set()
    seen = set()

    def play(board, player):
        key = (board, player)
        if key in seen:
            return
        seen.add(key)
        if winner(board) or "b" not in board:
            finals.add(board)
            return
        nxt = "o" if player == "x" else "x"
        for i, cell in enumerate(board):
            if cell == "b":
                play(board[:i] + (player,) + board[i + 1:], nxt)

    play(("b",) * 9, "x")
    return finals


def main():
    finals = enumerate_finals()
    rows = []
    for board in finals:
        label = "positive" if winner(board) == "x" else "negative"
        rows.append((label, board))
    n_pos = sum(1 for label, _ in rows if label == "positive")
    assert len(rows) == 958, f"expected 958 final boards, got {len(rows)}"
    assert n_pos == 626, f"expected 626 x wins, got {n_pos}"
    assert len(rows) - n_pos == 332

    rows.sort(key=lambda r: (r[0] == "negative", r[1]))
    out = Path(__file__).resolve().parent.parent / "data" / "tic_tac_toe.csv"
    with open(out, "w") as f:
        f.write(",".join(COLUMNS + ["outcome"]) + "\n")
        for label, board in rows:
            f.write(",".join(board) + f",{label}\n")
    print(f"wrote {out}: {len(rows)} rows ({n_pos} positive)")


if __name__ == "__main__":
    main()
