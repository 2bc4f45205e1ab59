"""Progress bar management for CLI operations."""

from types import TracebackType

from tqdm import tqdm


class EpochProgressManager:
    """Class to manage progress over training epochs."""

    def __init__(
        self, total_epochs: int, desc: str = "Training", disable: bool | None = None
    ) -> None:
        """Initialize the progress bar manager.

        Args:
            total_epochs: Number of epochs the run will perform
            desc: Label shown in front of the bar
            disable: True hides the bar, None hides it when stderr is not a terminal
        """
        self.main_progress = tqdm(
            total=total_epochs,
            desc=desc,
            unit="epoch",
            disable=disable,
            bar_format="{desc}: {n}/{total} [{bar}] {percentage:3.0f}% | {postfix}",
        )

    def finish_epoch(self, epoch: int, mqe: float) -> None:
        """Advance by one epoch and show its training MQE.

        Args:
            epoch: 0-based index of the finished epoch
            mqe: Training-set MQE after the epoch
        """
        self.main_progress.set_postfix_str(f"epoch {epoch + 1} MQE={mqe:.4f}")
        self.main_progress.update(1)

    def close(self) -> None:
        """Cleanup after training is done."""
        self.main_progress.close()

    def __enter__(self) -> "EpochProgressManager":
        """Context manager entry point.

        Returns:
            Instance of self
        """
        return self

    def __exit__(
        self,
        exc_type: type[BaseException] | None,
        exc_val: BaseException | None,
        exc_tb: TracebackType | None,
    ) -> None:
        """Close the bar, whether or not training raised.

        Args:
            exc_type: Exception type
            exc_val: Exception value
            exc_tb: Traceback
        """
        self.close()
