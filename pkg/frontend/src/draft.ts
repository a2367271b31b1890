/** Working edit script: staged actions with undo. */

import type { EditAction, EditScript } from "./serialize.js";
import { describeAction, serializeScript } from "./serialize.js";

export class EditDraft {
  private actions: EditAction[] = [];

  stage(action: EditAction): void {
    this.actions.push(action);
  }

  undo(): EditAction | undefined {
    return this.actions.pop();
  }

  clear(): void {
    this.actions = [];
  }

  get length(): number {
    return this.actions.length;
  }

  script(): EditScript {
    return { actions: [...this.actions] };
  }

  serialized(): string {
    return serializeScript(this.script());
  }

  describe(): string[] {
    return this.actions.map(describeAction);
  }
}
